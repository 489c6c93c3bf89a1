#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "gmis/generators.hpp"
#include "gmis/kc_transform.hpp"
#include "oracles.hpp"

using namespace gmis;

namespace {

// x = 0 with leaves 1, 2; bare path 0-3-4; y = 4 with leaves 5, 6.
Graph barbell() {
  const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}};
  return Graph(7, e);
}

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("bare paths on small trees") {
  CHECK(find_bare_paths(path_graph(4)).size() == 6);
  const auto star = find_bare_paths(star_graph(4));
  CHECK(star.size() == 3);
  for (const auto& p : star) {
    CHECK(p.x == 0);
    CHECK(p.length() == 1);
  }
  CHECK(find_bare_paths(path_graph(3)).size() == 3);

  const auto p = bare_path(barbell(), 0, 4);
  CHECK(p.interior == std::vector<Vertex>{3});
  CHECK(p.length() == 2);
  CHECK(bare_path(barbell(), 4, 0).interior == std::vector<Vertex>{3});
  CHECK_THROWS_AS(bare_path(star_graph(5), 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(bare_path(barbell(), 1, 5), std::invalid_argument);
  CHECK_THROWS_AS(bare_path(barbell(), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(bare_path(cycle_graph(5), 0, 1), std::invalid_argument);
}

TEST_CASE("every listed bare path has degree-2 interior") {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const auto tree = generate({Family::uniform_tree, 2 + rng.below(20)}, rng);
    for (const auto& p : find_bare_paths(tree)) {
      CHECK(p.x < p.y);
      for (Vertex v : p.interior) CHECK(tree.degree(v) == 2);
      const auto d = distance(tree, p.x, p.y);
      CHECK(*d == p.length());
    }
  }
}

TEST_CASE("proper transformation on a barbell") {
  const auto t = barbell();
  CHECK(is_proper(t, 0, 4));
  const auto after = kc(t, 0, 4);
  CHECK(is_tree(after));
  CHECK(after.degree(0) == 5);
  CHECK(after.degree(4) == 1);
  CHECK(leaf_count(t) == 4);
  CHECK(leaf_count(after) == 5);
  CHECK(nu(after) >= nu(t));

  const auto part = kc_partition(t, 0, 4);
  CHECK(sorted(part.a) == std::vector<Vertex>{1, 2});
  CHECK(sorted(part.b) == std::vector<Vertex>{5, 6});
  CHECK(sorted(part.p) == std::vector<Vertex>{0, 3, 4});
}

TEST_CASE("adjacent endpoints") {
  // Double star: centres 0 and 1 adjacent, two leaves each.
  const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}};
  const Graph t(6, e);
  const auto after = kc(t, 0, 1);
  CHECK(is_tree(after));
  CHECK(after.degree(0) == 5);
  CHECK(leaf_count(after) == leaf_count(t) + 1);
}

TEST_CASE("improper transformations give isomorphic trees") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& t : all_free_trees(n)) {
      for (const auto& p : find_bare_paths(t)) {
        for (auto [x, y] : {std::pair{p.x, p.y}, std::pair{p.y, p.x}}) {
          const auto after = kc(t, x, y);
          if (is_proper(t, x, y)) {
            CHECK(leaf_count(after) == leaf_count(t) + 1);
            CHECK_FALSE(oracle::isomorphic(after, t));
          } else {
            CHECK(oracle::isomorphic(after, t));
          }
          CHECK(nu(after) >= nu(t));
        }
      }
    }
  }
}

TEST_CASE("partition covers the tree") {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto tree = generate({Family::uniform_tree, 3 + rng.below(15)}, rng);
    for (const auto& p : find_bare_paths(tree)) {
      const auto part = kc_partition(tree, p.x, p.y);
      CHECK(part.a.size() + part.b.size() + part.p.size() == tree.order());
      CHECK(part.p.size() == p.length() + 1);
    }
  }
}

TEST_CASE("verification sweep at small orders") {
  const auto r = verify_kc_nu(7);
  CHECK(r.ok());
  CHECK(r.trees == 1 + 1 + 2 + 3 + 6 + 11);
  CHECK(r.proper > 0);
  CHECK(r.records.size() == r.transformations);
  CHECK_THROWS_AS(verify_kc_nu(10), std::invalid_argument);
}

TEST_CASE("sweep output does not depend on the thread count") {
  const auto a = verify_kc_nu(7, 1);
  const auto b = verify_kc_nu(7, 4);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].tree_code == b.records[i].tree_code);
    CHECK(a.records[i].x == b.records[i].x);
    CHECK(a.records[i].nu_after == b.records[i].nu_after);
  }
}

TEST_CASE("path minimality at small orders") {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto r = verify_path_minimum(n);
    CHECK(r.path_is_minimum);
    CHECK(r.rows.size() == all_free_trees(n).size());
    CHECK(r.rows.front().value == alpha(static_cast<long>(n)));
  }
  const auto four = verify_path_minimum(4);
  REQUIRE(four.rows.size() == 2);
  CHECK(four.rows[0].is_path);
  CHECK(four.rows[1].value == Rational(5, 2));
}

TEST_CASE("random larger trees are never below the path") {
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 10 + rng.below(3);
    const auto tree = generate({Family::uniform_tree, n}, rng);
    CHECK(exact_expected_mis(tree) >= alpha(static_cast<long>(n)));
  }
}
