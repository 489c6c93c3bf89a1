#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gmis/rng.hpp"

namespace gmis {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1, stored as compressed
/// sorted adjacency lists. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Throws std::invalid_argument on self-loops,
  /// duplicate edges or out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges);

  /// Builds from an edge list after dropping self-loops and collapsing
  /// parallel edges (in either orientation).
  static Graph simplified(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

/// Checks symmetry, simplicity and sortedness of the adjacency structure.
/// Returns an empty string when valid, otherwise a description of the first
/// violation found.
std::string validate(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_forest(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// Subgraph induced on `vertices`, relabelled to 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Shortest-path hop count; std::nullopt when u and v are disconnected.
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);

/// BFS distances from `source`; unreachable vertices get kUnreachable.
inline constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// Per-vertex arrival times in [0, 1), pairwise distinct. Also caches the
/// vertex order by increasing label, which is what the greedy process scans.
class Labelling {
 public:
  Labelling() = default;

  /// Throws std::invalid_argument if a value lies outside [0, 1) or two
  /// values tie.
  explicit Labelling(std::vector<double> values);

  /// Labelling equivalent to a vertex permutation: order[i] is the i-th vertex
  /// to arrive; it receives label i/n.
  static Labelling from_order(std::span<const Vertex> order);

  std::size_t size() const { return values_.size(); }
  double operator[](Vertex v) const { return values_[v]; }
  std::span<const double> values() const { return values_; }
  /// Vertices sorted by increasing label.
  std::span<const Vertex> order() const { return order_; }

 private:
  friend Labelling sample_labelling(std::size_t n, Rng& rng);
  Labelling(std::vector<double> values, std::vector<Vertex> order)
      : values_(std::move(values)), order_(std::move(order)) {}

  std::vector<double> values_;
  std::vector<Vertex> order_;
};

/// n i.i.d. uniform labels; colliding values are redrawn.
Labelling sample_labelling(std::size_t n, Rng& rng);

struct RootedTree {
  static constexpr Vertex kNoParent = static_cast<Vertex>(-1);

  Vertex root = 0;
  std::vector<Vertex> parent;  // parent[root] == kNoParent
  std::vector<std::vector<Vertex>> children;

  std::size_t order() const { return parent.size(); }
};

/// Roots a tree at `root`. Throws std::invalid_argument for non-trees.
RootedTree root_tree(const Graph& tree, Vertex root);

/// One or two central vertices of a tree (leaf peeling).
std::vector<Vertex> tree_centers(const Graph& tree);

/// Isomorphism-complete code of an unlabelled tree. Nested-parenthesis AHU
/// encoding rooted at the center; for bicentral trees the smaller of the two
/// encodings.
struct CanonicalCode {
  std::string bytes;

  auto operator<=>(const CanonicalCode&) const = default;
};

/// AHU code of the subtree of `tree` hanging at `root`.
std::string rooted_code(const RootedTree& tree, Vertex root);

/// Throws std::invalid_argument if `tree` is not a tree. The empty graph is
/// rejected as well.
CanonicalCode canonical_code(const Graph& tree);

/// Edge-list text format: header `n m`, then m lines `u v`. Lines starting
/// with '#' are ignored.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// Common fixed graphs.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t n);  // center 0, leaves 1..n-1
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);

}  // namespace gmis

template <>
struct std::hash<gmis::CanonicalCode> {
  std::size_t operator()(const gmis::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes);
  }
};
