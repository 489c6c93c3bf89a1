#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gmis/generators.hpp"
#include "gmis/graph.hpp"

namespace gmis {

/// Streaming mean/variance (Welford) with an exact pairwise merge (Chan et
/// al.), so partial aggregates can be combined.
class RunningStats {
 public:
  void add(double x);
  void merge(const RunningStats& other);

  std::size_t count() const { return count_; }
  double mean() const { return mean_; }
  /// Unbiased sample variance; 0 when fewer than two samples.
  double variance() const { return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0; }
  double min() const { return min_; }
  double max() const { return max_; }

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double min_ = 0.0;
  double max_ = 0.0;
};

struct Estimate {
  double mean = 0.0;
  double variance = 0.0;   // sample variance of the per-trial values
  double std_error = 0.0;  // sqrt(variance / trials)
  std::size_t trials = 0;
  double ci_lo = 0.0;      // mean -+ 1.96 std_error
  double ci_hi = 0.0;
  std::uint64_t seed = 0;

  /// Normal-approximation interval mean -+ z * std_error.
  std::pair<double, double> interval(double z) const { return {mean - z * std_error, mean + z * std_error}; }
};

Estimate make_estimate(const RunningStats& stats, std::uint64_t seed);

/// Greedy independence ratio: per trial a fresh graph (random families) and a
/// fresh labelling. Identical (spec, trials, seed) give identical output for
/// any thread count.
Estimate mc_iota(const GeneratorSpec& spec, std::size_t trials, std::uint64_t seed, unsigned threads = 1);

/// Same for one fixed graph; only the labelling is resampled.
Estimate mc_iota(const Graph& g, std::size_t trials, std::uint64_t seed, unsigned threads = 1);

struct VariancePoint {
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0;
};

struct VarianceCurve {
  std::vector<VariancePoint> points;
  bool strictly_decreasing = false;  // reported, not enforced
};

VarianceCurve variance_curve(GeneratorSpec spec, std::span<const std::size_t> ns, std::size_t trials,
                             std::uint64_t seed, unsigned threads = 1);

struct DecayRow {
  std::size_t distance = 0;
  bool open_ended = false;  // bucket collects every distance >= `distance`
  std::size_t pairs = 0;
  double cov = 0.0;         // mean over pairs of the sample covariance
};

struct DecayTable {
  std::vector<DecayRow> rows;  // ascending distance; empty buckets omitted
};

/// One graph is drawn; `pair_samples` uniform vertex pairs (u = v allowed)
/// are bucketed by distance, exact up to `max_distance - 1` and pooled from
/// `max_distance` on. Disconnected pairs are skipped. For every pair the
/// covariance of the two occupancy indicators is estimated over `trials`
/// labellings.
DecayTable covariance_by_distance(const GeneratorSpec& spec, std::size_t trials, std::size_t pair_samples,
                                  std::uint64_t seed, std::size_t max_distance = 10, unsigned threads = 1);

struct TailRow {
  std::size_t r = 0;
  double fraction = 0.0;  // of vertices whose longest decreasing path has >= r edges
};

/// Empirical tail of the longest decreasing path over every vertex of every
/// trial, for r = 0..r_max.
std::vector<TailRow> decreasing_path_tail(const GeneratorSpec& spec, std::size_t trials, std::size_t r_max,
                                          std::uint64_t seed, unsigned threads = 1);

struct RoundsStats {
  Estimate estimate;
  std::size_t min = 0;
  std::size_t max = 0;
};

/// Round count of the parallel greedy variant across trials.
RoundsStats rounds_stats(const GeneratorSpec& spec, std::size_t trials, std::uint64_t seed, unsigned threads = 1);

/// CSV schemas.
std::string estimate_csv_header();  // family,n,param,trials,seed,mean,var,stderr,ci_lo,ci_hi
std::string estimate_csv_row(const GeneratorSpec& spec, const Estimate& e);
std::string decay_csv_header();     // dist,pairs,cov
std::string decay_csv_row(const DecayRow& row);

/// Shortest round-trip representation of a double.
std::string format_double(double x);

}  // namespace gmis
