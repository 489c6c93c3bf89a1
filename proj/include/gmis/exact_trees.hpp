#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gmis/graph.hpp"

namespace gmis {

/// Exact rational in lowest terms (GMP keeps mpq values canonical).
using Rational = mpq_class;

std::string to_string(const Rational& q);

/// alpha_n = expected greedy MIS size of the n-vertex path, for
/// -1 <= n <= max_index, built from
///   alpha_{-1} = alpha_0 = 0,  alpha_n = 1 + (2/n) * sum_{i=1}^{n} alpha_{i-2}
/// with a running prefix sum.
class AlphaTable {
 public:
  explicit AlphaTable(std::size_t max_index);

  std::size_t max_index() const { return values_.size() - 1; }
  /// n in [-1, max_index]; throws std::out_of_range otherwise.
  const Rational& operator[](long n) const;

  /// xi_{n,l} = alpha_{n+1} + ... + alpha_{n+l}.
  Rational xi(std::size_t n, std::size_t l) const;

  /// alpha_0..alpha_upto as integers over one common denominator.
  struct Scaled {
    mpz_class denominator;
    std::vector<mpz_class> numerators;
  };
  Scaled scaled(std::size_t upto) const;

 private:
  std::vector<Rational> values_;  // values_[n] = alpha_n, n >= 0
};

/// alpha_n from a process-wide table grown on demand. n >= -1.
Rational alpha(long n);

/// A table holding at least alpha_0..alpha_n (shared, grown on demand).
const AlphaTable& alpha_table(std::size_t n);

struct ClaimReport {
  bool holds = true;
  std::size_t checked = 0;
  std::optional<std::string> counterexample;
};

/// alpha_{n+1} >= alpha_n for 0 <= n < N, and alpha_{m+n} <= alpha_m + alpha_n
/// for all m, n >= 1 with m + n <= N. Exact arithmetic.
ClaimReport check_claim_monotone_subadd(std::size_t max_n);

/// xi_{a,l} + xi_{b,l} <= xi_{a+b,l} + xi_{0,l} for 1 <= a <= A, 1 <= b <= B,
/// 1 <= l <= L. Exact arithmetic.
ClaimReport check_claim_xi(std::size_t max_a, std::size_t max_b, std::size_t max_l);

inline constexpr std::size_t kDefaultExactCap = 12;
inline constexpr std::size_t kBruteForceMax = 8;

/// Memoized exact expected greedy MIS size of forests. Trees are keyed by
/// canonical code; a forest is the sum over its components.
class ForestValueCache {
 public:
  explicit ForestValueCache(std::size_t cap = kDefaultExactCap) : cap_(cap) {}

  /// Throws std::invalid_argument for non-forests or forests above the cap.
  Rational expected_mis(const Graph& forest);

  std::size_t size() const;
  void clear();

 private:
  Rational tree_value(const Graph& tree, const CanonicalCode& code);

  std::size_t cap_;
  mutable std::mutex mutex_;
  std::map<std::string, Rational> values_;
};

/// E[i(F)] via first-vertex conditioning on each tree:
///   E[i(T)] = 1 + (1/n) * sum_v sum_{S in T*v} E[i(S)].
/// Uses a process-wide cache.
Rational exact_expected_mis(const Graph& forest, std::size_t cap = kDefaultExactCap);

/// Average greedy MIS size over all n! vertex orders. n <= 8.
Rational brute_force_expected_mis(const Graph& g);

/// Components (as vertex lists of g) left after deleting v and N(v).
std::vector<std::vector<Vertex>> shatter(const Graph& g, Vertex v);

/// Sorted multiset of component orders of T*v.
std::vector<std::size_t> kappa(const Graph& tree, Vertex v);
/// nu_v(T) = sum of alpha_k over k in kappa_v(T).
Rational nu_v(const Graph& tree, Vertex v);
/// nu(T) = sum over v of nu_v(T).
Rational nu(const Graph& tree);

}  // namespace gmis
