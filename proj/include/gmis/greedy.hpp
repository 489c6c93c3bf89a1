#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gmis/graph.hpp"

namespace gmis {

struct GreedyResult {
  std::vector<bool> occupied;
  std::size_t mis_size = 0;
  std::optional<std::size_t> rounds;  // set by run_parallel only
};

/// Sequential greedy MIS: scan vertices by increasing label, occupy a vertex
/// iff none of its earlier neighbours is occupied. Throws
/// std::invalid_argument when the labelling does not match the graph order.
GreedyResult run_greedy(const Graph& g, const Labelling& lab);

/// Round-synchronous variant: each round occupies every remaining vertex whose
/// label is a local minimum among remaining neighbours, then deletes those
/// vertices together with their neighbours. Same occupied set as run_greedy.
GreedyResult run_parallel(const Graph& g, const Labelling& lab);

/// True iff `occupied` is independent and maximal in g.
bool is_maximal_independent(const Graph& g, const std::vector<bool>& occupied);

/// Vertices reachable from v along strictly label-decreasing paths, v
/// included. Sorted.
std::vector<Vertex> past_set(const Graph& g, const Labelling& lab, Vertex v);

/// Length (edge count) of the longest strictly label-decreasing path starting
/// at v.
std::size_t longest_decreasing_path_from(const Graph& g, const Labelling& lab, Vertex v);

/// The same quantity for every vertex at once, in O(n log n + m).
std::vector<std::size_t> longest_decreasing_paths(const Graph& g, const Labelling& lab);

struct PathCount {
  std::uint64_t count = 0;
  bool overflow = false;  // enumeration stopped once count exceeded the cap
};

/// Number of simple paths with 1..r edges starting at v, by depth-first
/// enumeration.
PathCount count_paths_from(const Graph& g, Vertex v, std::size_t r,
                           std::uint64_t cap = 100'000'000);

}  // namespace gmis
