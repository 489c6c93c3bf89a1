#include "gmis/exact_trees.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gmis {

std::string to_string(const Rational& q) { return q.get_str(); }

AlphaTable::AlphaTable(std::size_t max_index) {
  values_.reserve(max_index + 1);
  values_.emplace_back(0);  // alpha_0
  // prefix = sum_{k=-1}^{n-2} alpha_k
  Rational prefix = 0;
  for (std::size_t n = 1; n <= max_index; ++n) {
    if (n >= 2) prefix += values_[n - 2];
    Rational a = 1 + Rational(2 * prefix) / Rational(static_cast<unsigned long>(n));
    a.canonicalize();
    values_.push_back(std::move(a));
  }
}

const Rational& AlphaTable::operator[](long n) const {
  static const Rational zero = 0;
  if (n == -1) return zero;
  if (n < -1 || static_cast<std::size_t>(n) >= values_.size()) {
    throw std::out_of_range("alpha index " + std::to_string(n) + " outside table");
  }
  return values_[static_cast<std::size_t>(n)];
}

Rational AlphaTable::xi(std::size_t n, std::size_t l) const {
  Rational sum = 0;
  for (std::size_t j = 1; j <= l; ++j) sum += (*this)[static_cast<long>(n + j)];
  return sum;
}

AlphaTable::Scaled AlphaTable::scaled(std::size_t upto) const {
  if (upto > max_index()) throw std::out_of_range("scaled: index outside table");
  Scaled out;
  out.denominator = 1;
  for (std::size_t n = 0; n <= upto; ++n) {
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), values_[n].get_den_mpz_t());
  }
  out.numerators.reserve(upto + 1);
  for (std::size_t n = 0; n <= upto; ++n) {
    mpz_class factor = out.denominator / values_[n].get_den();
    out.numerators.push_back(values_[n].get_num() * factor);
  }
  return out;
}

namespace {

std::mutex g_alpha_mutex;
// Superseded tables are kept alive so references handed out earlier stay valid.
std::vector<std::unique_ptr<AlphaTable>> g_alpha_tables;

}  // namespace

const AlphaTable& alpha_table(std::size_t n) {
  std::lock_guard lock(g_alpha_mutex);
  if (g_alpha_tables.empty() || g_alpha_tables.back()->max_index() < n) {
    const std::size_t current = g_alpha_tables.empty() ? 0 : g_alpha_tables.back()->max_index();
    const std::size_t target = std::max<std::size_t>({n, 2 * current, 64});
    g_alpha_tables.push_back(std::make_unique<AlphaTable>(target));
  }
  return *g_alpha_tables.back();
}

Rational alpha(long n) {
  if (n < -1) throw std::out_of_range("alpha: index below -1");
  if (n <= 0) return 0;
  return alpha_table(static_cast<std::size_t>(n))[n];
}

ClaimReport check_claim_monotone_subadd(std::size_t max_n) {
  ClaimReport report;
  if (max_n == 0) return report;
  const auto table = AlphaTable(max_n).scaled(max_n);
  const auto& a = table.numerators;
  for (std::size_t n = 0; n < max_n; ++n) {
    ++report.checked;
    if (a[n + 1] < a[n]) {
      report.holds = false;
      report.counterexample = "monotonicity fails: alpha_" + std::to_string(n + 1) + " < alpha_" + std::to_string(n);
      return report;
    }
  }
  mpz_class sum;
  for (std::size_t m = 1; m < max_n; ++m) {
    for (std::size_t n = m; m + n <= max_n; ++n) {
      ++report.checked;
      mpz_add(sum.get_mpz_t(), a[m].get_mpz_t(), a[n].get_mpz_t());
      if (mpz_cmp(a[m + n].get_mpz_t(), sum.get_mpz_t()) > 0) {
        report.holds = false;
        report.counterexample = "subadditivity fails: alpha_" + std::to_string(m + n) + " > alpha_" +
                                std::to_string(m) + " + alpha_" + std::to_string(n);
        return report;
      }
    }
  }
  return report;
}

ClaimReport check_claim_xi(std::size_t max_a, std::size_t max_b, std::size_t max_l) {
  ClaimReport report;
  const std::size_t top = max_a + max_b + max_l;
  const auto table = AlphaTable(top).scaled(top);
  // prefix[k] = alpha_1 + ... + alpha_k, so xi_{n,l} = prefix[n+l] - prefix[n].
  std::vector<mpz_class> prefix(top + 1);
  prefix[0] = 0;
  for (std::size_t k = 1; k <= top; ++k) prefix[k] = prefix[k - 1] + table.numerators[k];
  auto p = [&](std::size_t k) { return prefix[k].get_mpz_t(); };

  mpz_class slack;
  mpz_ptr s = slack.get_mpz_t();
  for (std::size_t l = 1; l <= max_l; ++l) {
    for (std::size_t a = 1; a <= max_a; ++a) {
      for (std::size_t b = 1; b <= max_b; ++b) {
        ++report.checked;
        // slack = xi_{a+b,l} + xi_{0,l} - xi_{a,l} - xi_{b,l}
        mpz_sub(s, p(a + b + l), p(a + b));
        mpz_add(s, s, p(l));
        mpz_sub(s, s, p(a + l));
        mpz_add(s, s, p(a));
        mpz_sub(s, s, p(b + l));
        mpz_add(s, s, p(b));
        if (mpz_sgn(s) < 0) {
          report.holds = false;
          report.counterexample = "xi inequality fails at a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                  " l=" + std::to_string(l);
          return report;
        }
      }
    }
  }
  return report;
}

std::vector<std::vector<Vertex>> shatter(const Graph& g, Vertex v) {
  const std::size_t n = g.order();
  std::vector<bool> removed(n, false);
  removed[v] = true;
  for (Vertex w : g.neighbors(v)) removed[w] = true;
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(removed);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::size_t> kappa(const Graph& tree, Vertex v) {
  std::vector<std::size_t> orders;
  for (const auto& comp : shatter(tree, v)) orders.push_back(comp.size());
  std::sort(orders.begin(), orders.end());
  return orders;
}

Rational nu_v(const Graph& tree, Vertex v) {
  const auto& table = alpha_table(tree.order());
  Rational sum = 0;
  for (std::size_t k : kappa(tree, v)) sum += table[static_cast<long>(k)];
  return sum;
}

Rational nu(const Graph& tree) {
  Rational sum = 0;
  for (Vertex v = 0; v < tree.order(); ++v) sum += nu_v(tree, v);
  return sum;
}

Rational ForestValueCache::expected_mis(const Graph& forest) {
  if (!is_forest(forest)) throw std::invalid_argument("exact_expected_mis: input is not a forest");
  if (forest.order() > cap_) {
    throw std::invalid_argument("exact_expected_mis: order " + std::to_string(forest.order()) +
                                " exceeds cap " + std::to_string(cap_));
  }
  std::lock_guard lock(mutex_);
  Rational total = 0;
  for (const auto& comp : components(forest)) {
    Graph tree = induced_subgraph(forest, comp);
    const auto code = canonical_code(tree);
    total += tree_value(tree, code);
  }
  return total;
}

Rational ForestValueCache::tree_value(const Graph& tree, const CanonicalCode& code) {
  if (auto it = values_.find(code.bytes); it != values_.end()) return it->second;
  const std::size_t n = tree.order();
  Rational sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    for (const auto& comp : shatter(tree, v)) {
      Graph sub = induced_subgraph(tree, comp);
      const auto sub_code = canonical_code(sub);
      sum += tree_value(sub, sub_code);
    }
  }
  Rational value = 1 + sum / Rational(static_cast<unsigned long>(n));
  value.canonicalize();
  values_.emplace(code.bytes, value);
  return value;
}

std::size_t ForestValueCache::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

void ForestValueCache::clear() {
  std::lock_guard lock(mutex_);
  values_.clear();
}

Rational exact_expected_mis(const Graph& forest, std::size_t cap) {
  static ForestValueCache cache(std::numeric_limits<std::size_t>::max());
  if (forest.order() > cap) {
    throw std::invalid_argument("exact_expected_mis: order " + std::to_string(forest.order()) +
                                " exceeds cap " + std::to_string(cap));
  }
  return cache.expected_mis(forest);
}

Rational brute_force_expected_mis(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kBruteForceMax) {
    throw std::invalid_argument("brute_force_expected_mis: n = " + std::to_string(n) + " exceeds " +
                                std::to_string(kBruteForceMax));
  }
  if (n == 0) return 0;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  unsigned long total = 0;
  unsigned long perms = 0;
  std::vector<char> blocked(n);
  do {
    std::fill(blocked.begin(), blocked.end(), 0);
    for (Vertex v : order) {
      if (blocked[v]) continue;
      ++total;
      for (Vertex w : g.neighbors(v)) blocked[w] = 1;
    }
    ++perms;
  } while (std::next_permutation(order.begin(), order.end()));
  Rational out(total, perms);
  out.canonicalize();
  return out;
}

}  // namespace gmis
