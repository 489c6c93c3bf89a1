#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gmis/exact_trees.hpp"
#include "gmis/graph.hpp"

namespace gmis {

/// Path between x and y whose interior vertices all have degree 2.
struct BarePath {
  Vertex x = 0;
  Vertex y = 0;
  std::vector<Vertex> interior;  // ordered from x towards y

  std::size_t length() const { return interior.size() + 1; }
};

/// Every unordered pair {x, y}, x < y, joined by a bare path, adjacent pairs
/// included. Sorted by (x, y).
std::vector<BarePath> find_bare_paths(const Graph& tree);

/// The bare path from x to y. Throws std::invalid_argument when x == y, when
/// the input is not a tree, or when the x-y path is not bare.
BarePath bare_path(const Graph& tree, Vertex x, Vertex y);

/// KC-transformation: with z the neighbour of y on the x-y path, move every
/// edge {y, w} with w != z to {x, w}.
Graph kc(const Graph& tree, Vertex x, Vertex y);

std::size_t leaf_count(const Graph& tree);

/// A transformation is proper iff neither endpoint is a leaf.
bool is_proper(const Graph& tree, Vertex x, Vertex y);

struct KcPartition {
  std::vector<Vertex> a;  // vertices != x cut off from y by x
  std::vector<Vertex> b;  // vertices != y cut off from x by y
  std::vector<Vertex> p;  // the bare path itself
};

KcPartition kc_partition(const Graph& tree, Vertex x, Vertex y);

struct KcViolation {
  std::string kind;  // "nu-total", "nu-vertex", "nu-path", "grading"
  std::string tree;  // edge list "u-v u-v ..."
  Vertex x = 0;
  Vertex y = 0;
  std::string detail;
};

struct KcRecord {
  std::size_t n = 0;
  std::string tree_code;
  Vertex x = 0;
  Vertex y = 0;
  bool proper = false;
  std::size_t leaves_before = 0;
  std::size_t leaves_after = 0;
  Rational nu_before;
  Rational nu_after;
};

struct KcReport {
  std::size_t trees = 0;
  std::size_t transformations = 0;  // ordered (x, y) pairs examined
  std::size_t proper = 0;
  std::vector<KcRecord> records;
  std::vector<KcViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// For every free tree of order 2..n_max and every ordered bare-path pair
/// (x, y), checks against T' = kc(T, x, y):
///   nu(T') >= nu(T);  nu_v(T') >= nu_v(T) for v in A u B;
///   the sum of nu_v over P does not decrease;
///   proper => one more leaf, improper => isomorphic.
/// n_max <= 9.
KcReport verify_kc_nu(std::size_t n_max, unsigned threads = 1);

struct TreeValueRow {
  std::string code;
  std::size_t leaves = 0;
  bool is_path = false;
  Rational value;  // exact expected greedy MIS size
};

struct PathMinimumReport {
  std::size_t n = 0;
  std::vector<TreeValueRow> rows;  // sorted by value, then code
  bool path_is_minimum = false;
  bool unique_minimum = false;
};

/// Exact expected greedy MIS size for every free tree of order n (1..9) and
/// whether the path attains the minimum.
PathMinimumReport verify_path_minimum(std::size_t n);

}  // namespace gmis
