#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gmis {

/// Probability generating function of an offspring count.
class Pgf {
 public:
  enum class Kind { deterministic, poisson, coefficients };

  /// z^c.
  static Pgf deterministic(std::size_t c);
  /// exp(lambda (z - 1)), lambda > 0.
  static Pgf poisson(double lambda);
  /// sum_d p_d z^d. Throws std::invalid_argument unless the p_d are
  /// nonnegative and sum to 1 within 1e-12.
  static Pgf coefficients(std::vector<double> p);

  Kind kind() const { return kind_; }
  double parameter() const { return param_; }
  std::span<const double> coeffs() const { return coeffs_; }

  double operator()(double z) const;
  double derivative(double z) const;
  /// P(offspring = 0).
  double p0() const { return (*this)(0.0); }
  /// The law of D-1 for D with this law; requires p0 == 0.
  Pgf shifted_down() const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::deterministic;
  double param_ = 0.0;
  std::vector<double> coeffs_;
};

/// Simple multitype branching process with finite type set. offspring[k][j]
/// is the pgf of the number of type-j children of a type-k node; an empty
/// slot means no such children.
struct BranchingSpec {
  std::vector<std::string> types;
  std::vector<double> root;
  std::vector<std::vector<std::optional<Pgf>>> offspring;

  std::size_t type_count() const { return types.size(); }
};

/// Throws std::invalid_argument when dimensions mismatch, root weights are
/// negative or do not sum to 1 within 1e-12, or a pgf is malformed.
void validate(const BranchingSpec& spec);

/// y_k'(x) = prod_j G_{k->j}(1 - y_j(x)). The binomial thinning of the
/// offspring by "label below x" is absorbed by the pgf identity
/// E[(1 - y/x)^Bin(N, x)] = G(1 - y), which also removes the 0/0 at x = 0.
/// Throws std::invalid_argument when some y_j lies outside [0, 1].
std::vector<double> rhs(const BranchingSpec& spec, double x, std::span<const double> y);

struct OdeSolution {
  double step = 0.0;
  std::vector<double> grid;                  // x_i = i * step, i = 0..M
  std::vector<std::vector<double>> y;        // y[k][i]
  std::vector<double> root;                  // root distribution
  double iota = 0.0;                         // sum_k y_k(1) root_k

  /// sum_k y_k(x) root_k at a grid point. Throws std::invalid_argument when
  /// x is not (within 1e-9 relative) a grid point.
  double occupancy_at(double x) const;
};

/// Classical fixed-step RK4 from 0 to 1. `step` must be 1/M for an integer M.
/// Throws std::runtime_error if some y_k leaves [0, x + 10 step].
OdeSolution solve(const BranchingSpec& spec, double step);

double iota(const BranchingSpec& spec, double step);
double occupancy_at(const BranchingSpec& spec, double x, double step);

struct PresetParams {
  double lambda = 1.0;
  std::size_t d = 2;
};

/// Named limits: infinite_ray_star (d >= 1), poisson_gw (lambda > 0),
/// size_biased_gw (0 < lambda <= 1), d_ary (d >= 1), d_regular (d >= 3).
BranchingSpec preset(std::string_view name, const PresetParams& params);

/// One-type process with the given offspring law.
BranchingSpec single_type(const Pgf& offspring);

/// Tree with iid degrees drawn from `degrees` (p0 must be 0): a root type
/// with `degrees` children and a non-root type with one fewer.
BranchingSpec iid_degree(const Pgf& degrees);

/// Closed forms for the named presets. Throws std::invalid_argument for
/// unknown names or out-of-range parameters.
double closed_form(std::string_view name, const PresetParams& params);

struct ConstantEntry {
  std::string name;
  std::string params;
  std::string formula;
  double value = 0.0;
};

/// Every closed-form constant for the parameter ranges used in the
/// regression suite.
std::vector<ConstantEntry> constants_table();

}  // namespace gmis
