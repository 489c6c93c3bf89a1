#include <doctest.h>

#include <stdexcept>

#include "gmis/exact_trees.hpp"
#include "gmis/generators.hpp"
#include "oracles.hpp"

using namespace gmis;

namespace {

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> e = a.edges();
  const auto off = static_cast<Vertex>(a.order());
  for (auto [u, v] : b.edges()) e.emplace_back(u + off, v + off);
  return Graph(a.order() + b.order(), e);
}

}  // namespace

TEST_CASE("alpha base values") {
  CHECK(alpha(-1) == 0);
  CHECK(alpha(0) == 0);
  CHECK(alpha(1) == 1);
  CHECK(alpha(2) == 1);
  CHECK(alpha(3) == q(5, 3));
  CHECK(alpha(4) == 2);
  CHECK_THROWS_AS(alpha(-2), std::out_of_range);
}

TEST_CASE("alpha_3 and alpha_4 by permutation enumeration") {
  CHECK(oracle::permutation_average(path_graph(3)) == q(5, 3));
  CHECK(oracle::permutation_average(path_graph(4)) == 2);
}

TEST_CASE("alpha agrees with the subset recursion on paths") {
  for (long n = 1; n <= 16; ++n) CHECK(alpha(n) == oracle::subset_dp_expected(path_graph(n)));
}

TEST_CASE("alpha table growth keeps old references valid") {
  const auto& small = alpha_table(10);
  const Rational a10 = small[10];
  const auto& big = alpha_table(5000);
  CHECK(big.max_index() >= 5000);
  CHECK(small[10] == a10);
  CHECK(big[10] == a10);
}

TEST_CASE("alpha per vertex approaches the path constant") {
  // (1 - e^-2)/2 = 0.432332...
  const double ratio = alpha(2000).get_d() / 2000.0;
  CHECK(ratio == doctest::Approx(0.4323323584).epsilon(1e-3));
}

TEST_CASE("xi sums consecutive alphas") {
  const auto& t = alpha_table(20);
  CHECK(t.xi(0, 1) == alpha(1));
  CHECK(t.xi(2, 3) == alpha(3) + alpha(4) + alpha(5));
  // The smallest instance of the xi inequality: 2 alpha_2 <= alpha_3 + alpha_1.
  CHECK(t.xi(1, 1) + t.xi(1, 1) == 2);
  CHECK(t.xi(2, 1) + t.xi(0, 1) == q(8, 3));
}

TEST_CASE("scaled table reproduces alpha") {
  const auto s = alpha_table(50).scaled(50);
  for (long n = 0; n <= 50; ++n) {
    Rational r(s.numerators[n], s.denominator);
    r.canonicalize();
    CHECK(r == alpha(n));
  }
}

TEST_CASE("claims at small sizes") {
  const auto mono = check_claim_monotone_subadd(300);
  CHECK(mono.holds);
  CHECK(mono.checked > 0);
  CHECK_FALSE(mono.counterexample.has_value());
  const auto xi = check_claim_xi(30, 30, 30);
  CHECK(xi.holds);
  CHECK(xi.checked == 30u * 30u * 30u);
}

TEST_CASE("exact value equals both brute-force oracles on free trees up to 8") {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& t : all_free_trees(n)) {
      const auto e = exact_expected_mis(t);
      CHECK(e == brute_force_expected_mis(t));
      CHECK(e == oracle::subset_dp_expected(t));
    }
  }
}

TEST_CASE("library brute force equals the permutation oracle on random graphs") {
  Rng rng(4);
  for (int t = 0; t < 30; ++t) {
    const auto g = oracle::random_graph(1 + rng.below(7), 0.4, rng);
    CHECK(brute_force_expected_mis(g) == oracle::permutation_average(g));
  }
  CHECK_THROWS_AS(brute_force_expected_mis(path_graph(9)), std::invalid_argument);
}

TEST_CASE("paths up to the cap") {
  for (std::size_t n = 1; n <= 12; ++n) CHECK(exact_expected_mis(path_graph(n)) == alpha(static_cast<long>(n)));
  CHECK_THROWS_AS(exact_expected_mis(path_graph(13)), std::invalid_argument);
  CHECK(exact_expected_mis(path_graph(20), 20) == alpha(20));
}

TEST_CASE("random trees beyond brute force match the subset recursion") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto tree = generate({Family::uniform_tree, 9 + rng.below(6)}, rng);
    CHECK(exact_expected_mis(tree, 14) == oracle::subset_dp_expected(tree));
  }
}

TEST_CASE("star values from the oracle") {
  // (1 + (n-1)^2) / n: the centre first gives 1; otherwise all n-1 leaves
  // are taken, since the centre is blocked by the first leaf.
  for (long n = 2; n <= 8; ++n) {
    const auto s = star_graph(static_cast<std::size_t>(n));
    CHECK(oracle::permutation_average(s) == q(1 + (n - 1) * (n - 1), n));
    CHECK(exact_expected_mis(s) == q(1 + (n - 1) * (n - 1), n));
  }
}

TEST_CASE("forests add over components") {
  const auto f = disjoint_union(path_graph(4), star_graph(5));
  CHECK(exact_expected_mis(f) == alpha(4) + exact_expected_mis(star_graph(5)));
  CHECK(exact_expected_mis(empty_graph(5)) == 5);
  CHECK(exact_expected_mis(empty_graph(0)) == 0);
  CHECK_THROWS_AS(exact_expected_mis(cycle_graph(5)), std::invalid_argument);
}

TEST_CASE("cache") {
  ForestValueCache cache(10);
  CHECK(cache.expected_mis(path_graph(6)) == alpha(6));
  CHECK(cache.size() > 0);
  CHECK_THROWS_AS(cache.expected_mis(path_graph(11)), std::invalid_argument);
  cache.clear();
  CHECK(cache.size() == 0);
}

TEST_CASE("shattering") {
  // P_5 at vertex 1 leaves {3, 4}.
  const auto parts = shatter(path_graph(5), 1);
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == std::vector<Vertex>{3, 4});
  CHECK(kappa(path_graph(5), 2) == std::vector<std::size_t>{1, 1});
  CHECK(kappa(path_graph(3), 1).empty());
  CHECK(kappa(path_graph(7), 3) == std::vector<std::size_t>{2, 2});
  CHECK(kappa(star_graph(6), 0).empty());
  CHECK(nu_v(star_graph(6), 0) == 0);
  CHECK(kappa(star_graph(6), 1) == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("nu and the first-vertex identity") {
  CHECK(nu(path_graph(4)) == 4);
  // For paths, 1 + nu(P_n)/n = alpha_n.
  for (std::size_t n = 1; n <= 30; ++n) {
    CHECK(1 + nu(path_graph(n)) / static_cast<long>(n) == alpha(static_cast<long>(n)));
  }
  // For any tree, alpha-weighting is only exact on paths; on trees the
  // identity holds with the exact values of the pieces.
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    const auto tree = generate({Family::uniform_tree, 2 + rng.below(9)}, rng);
    Rational total = 0;
    for (Vertex v = 0; v < tree.order(); ++v) {
      for (const auto& part : shatter(tree, v)) total += exact_expected_mis(induced_subgraph(tree, part));
    }
    CHECK(1 + total / static_cast<long>(tree.order()) == exact_expected_mis(tree));
  }
}
