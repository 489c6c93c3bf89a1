#include "gmis/estimators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "gmis/greedy.hpp"
#include "gmis/parallel.hpp"

namespace gmis {

namespace {

// Sub-stream ids for derive_seed.
constexpr std::uint64_t kTrialStream = 0;
constexpr std::uint64_t kGraphStream = 1;
constexpr std::uint64_t kPairStream = 2;
constexpr std::uint64_t kLabelStream = 3;

void require_trials(std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
}

// Runs `per_trial(rng, graph)` once per trial and returns the values in trial
// order. Deterministic families reuse one graph.
template <typename PerTrial>
std::vector<double> run_trials(const GeneratorSpec& spec, std::size_t trials, std::uint64_t seed, unsigned threads,
                               PerTrial per_trial) {
  require_trials(trials);
  check_spec(spec);
  std::vector<double> values(trials);
  if (!is_random_family(spec.family)) {
    Rng unused(0);
    const Graph g = generate(spec, unused);
    parallel_for(trials, threads, [&](std::size_t i) {
      Rng rng(derive_seed(seed, kTrialStream, i));
      values[i] = per_trial(rng, g);
    });
  } else {
    parallel_for(trials, threads, [&](std::size_t i) {
      Rng rng(derive_seed(seed, kTrialStream, i));
      const Graph g = generate(spec, rng);
      values[i] = per_trial(rng, g);
    });
  }
  return values;
}

Estimate summarize(const std::vector<double>& values, std::uint64_t seed) {
  RunningStats stats;
  for (double v : values) stats.add(v);
  return make_estimate(stats, seed);
}

double iota_trial(Rng& rng, const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("greedy independence ratio of an empty graph");
  const auto lab = sample_labelling(g.order(), rng);
  return static_cast<double>(run_greedy(g, lab).mis_size) / static_cast<double>(g.order());
}

}  // namespace

void RunningStats::add(double x) {
  ++count_;
  if (count_ == 1) {
    min_ = max_ = x;
  } else {
    min_ = std::min(min_, x);
    max_ = std::max(max_, x);
  }
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

void RunningStats::merge(const RunningStats& other) {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count_);
  const double nb = static_cast<double>(other.count_);
  const double delta = other.mean_ - mean_;
  const double total = na + nb;
  mean_ += delta * nb / total;
  m2_ += other.m2_ + delta * delta * na * nb / total;
  count_ += other.count_;
  min_ = std::min(min_, other.min_);
  max_ = std::max(max_, other.max_);
}

Estimate make_estimate(const RunningStats& stats, std::uint64_t seed) {
  Estimate e;
  e.mean = stats.mean();
  e.variance = stats.variance();
  e.trials = stats.count();
  e.std_error = e.trials > 0 ? std::sqrt(e.variance / static_cast<double>(e.trials)) : 0.0;
  e.ci_lo = e.mean - 1.96 * e.std_error;
  e.ci_hi = e.mean + 1.96 * e.std_error;
  e.seed = seed;
  return e;
}

Estimate mc_iota(const GeneratorSpec& spec, std::size_t trials, std::uint64_t seed, unsigned threads) {
  return summarize(run_trials(spec, trials, seed, threads, iota_trial), seed);
}

Estimate mc_iota(const Graph& g, std::size_t trials, std::uint64_t seed, unsigned threads) {
  require_trials(trials);
  std::vector<double> values(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, kTrialStream, i));
    values[i] = iota_trial(rng, g);
  });
  return summarize(values, seed);
}

VarianceCurve variance_curve(GeneratorSpec spec, std::span<const std::size_t> ns, std::size_t trials,
                             std::uint64_t seed, unsigned threads) {
  VarianceCurve curve;
  for (std::size_t n : ns) {
    spec.n = n;
    const auto e = mc_iota(spec, trials, seed, threads);
    curve.points.push_back({n, e.mean, e.variance});
  }
  curve.strictly_decreasing = true;
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    if (!(curve.points[i].variance < curve.points[i - 1].variance)) curve.strictly_decreasing = false;
  }
  return curve;
}

DecayTable covariance_by_distance(const GeneratorSpec& spec, std::size_t trials, std::size_t pair_samples,
                                  std::uint64_t seed, std::size_t max_distance, unsigned threads) {
  require_trials(trials);
  if (trials < 2) throw std::invalid_argument("covariance needs at least 2 trials");
  if (max_distance == 0) throw std::invalid_argument("max_distance must be positive");
  Rng graph_rng(derive_seed(seed, kGraphStream, 0));
  const Graph g = generate(spec, graph_rng);
  const std::size_t n = g.order();
  if (n == 0) throw std::invalid_argument("covariance on an empty graph");

  struct Pair {
    Vertex u;
    Vertex v;
    std::size_t bucket;
  };
  std::vector<Pair> pairs;
  Rng pair_rng(derive_seed(seed, kPairStream, 0));
  for (std::size_t i = 0; i < pair_samples; ++i) {
    const auto u = static_cast<Vertex>(pair_rng.below(n));
    const auto v = static_cast<Vertex>(pair_rng.below(n));
    const auto d = distance(g, u, v);
    if (!d) continue;
    pairs.push_back({u, v, std::min(*d, max_distance)});
  }

  // Integer tallies per pair, so merging worker results is order-independent.
  struct Tally {
    std::vector<std::uint64_t> su, sv, suv;
  };
  const unsigned workers = std::max(1u, threads);
  std::vector<Tally> tallies(workers, Tally{std::vector<std::uint64_t>(pairs.size()),
                                            std::vector<std::uint64_t>(pairs.size()),
                                            std::vector<std::uint64_t>(pairs.size())});
  parallel_for(workers, workers, [&](std::size_t w) {
    auto& t = tallies[w];
    for (std::size_t trial = w; trial < trials; trial += workers) {
      Rng rng(derive_seed(seed, kLabelStream, trial));
      const auto res = run_greedy(g, sample_labelling(n, rng));
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const bool ru = res.occupied[pairs[p].u];
        const bool rv = res.occupied[pairs[p].v];
        t.su[p] += ru;
        t.sv[p] += rv;
        t.suv[p] += ru && rv;
      }
    }
  });

  const double tt = static_cast<double>(trials);
  std::vector<double> cov_sum(max_distance + 1, 0.0);
  std::vector<std::size_t> count(max_distance + 1, 0);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    std::uint64_t su = 0, sv = 0, suv = 0;
    for (const auto& t : tallies) {
      su += t.su[p];
      sv += t.sv[p];
      suv += t.suv[p];
    }
    const double cov = (static_cast<double>(suv) - static_cast<double>(su) * static_cast<double>(sv) / tt) / (tt - 1.0);
    cov_sum[pairs[p].bucket] += cov;
    ++count[pairs[p].bucket];
  }
  DecayTable table;
  for (std::size_t d = 0; d <= max_distance; ++d) {
    if (count[d] == 0) continue;
    table.rows.push_back({d, d == max_distance, count[d], cov_sum[d] / static_cast<double>(count[d])});
  }
  return table;
}

std::vector<TailRow> decreasing_path_tail(const GeneratorSpec& spec, std::size_t trials, std::size_t r_max,
                                          std::uint64_t seed, unsigned threads) {
  require_trials(trials);
  check_spec(spec);
  // hist[i][r] = number of vertices in trial i whose longest path is exactly r
  // (capped at r_max).
  std::vector<std::vector<std::uint64_t>> hist(trials, std::vector<std::uint64_t>(r_max + 1, 0));
  std::vector<std::uint64_t> orders(trials, 0);
  parallel_for(trials, threads, [&](std::size_t i) {
    Rng rng(derive_seed(seed, kTrialStream, i));
    const Graph g = generate(spec, rng);
    const auto lab = sample_labelling(g.order(), rng);
    for (std::size_t len : longest_decreasing_paths(g, lab)) ++hist[i][std::min(len, r_max)];
    orders[i] = g.order();
  });
  std::vector<std::uint64_t> at_least(r_max + 2, 0);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    total += orders[i];
    for (std::size_t r = 0; r <= r_max; ++r) at_least[r] += hist[i][r];
  }
  for (std::size_t r = r_max; r-- > 0;) at_least[r] += at_least[r + 1];
  std::vector<TailRow> out;
  for (std::size_t r = 0; r <= r_max; ++r) {
    out.push_back({r, total ? static_cast<double>(at_least[r]) / static_cast<double>(total) : 0.0});
  }
  return out;
}

RoundsStats rounds_stats(const GeneratorSpec& spec, std::size_t trials, std::uint64_t seed, unsigned threads) {
  const auto values = run_trials(spec, trials, seed, threads, [](Rng& rng, const Graph& g) {
    return static_cast<double>(*run_parallel(g, sample_labelling(g.order(), rng)).rounds);
  });
  RoundsStats out;
  out.estimate = summarize(values, seed);
  out.min = static_cast<std::size_t>(*std::min_element(values.begin(), values.end()));
  out.max = static_cast<std::size_t>(*std::max_element(values.begin(), values.end()));
  return out;
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string estimate_csv_header() { return "family,n,param,trials,seed,mean,var,stderr,ci_lo,ci_hi"; }

std::string estimate_csv_row(const GeneratorSpec& spec, const Estimate& e) {
  return std::string(family_name(spec.family)) + "," + std::to_string(spec.order()) + "," + spec.param_string() +
         "," + std::to_string(e.trials) + "," + std::to_string(e.seed) + "," + format_double(e.mean) + "," +
         format_double(e.variance) + "," + format_double(e.std_error) + "," + format_double(e.ci_lo) + "," +
         format_double(e.ci_hi);
}

std::string decay_csv_header() { return "dist,pairs,cov"; }

std::string decay_csv_row(const DecayRow& row) {
  return std::to_string(row.distance) + (row.open_ended ? "+" : "") + "," + std::to_string(row.pairs) + "," +
         format_double(row.cov);
}

}  // namespace gmis
