#include "gmis/branching_ode.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace gmis {

namespace {

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

}  // namespace

Pgf Pgf::deterministic(std::size_t c) {
  Pgf g;
  g.kind_ = Kind::deterministic;
  g.param_ = static_cast<double>(c);
  return g;
}

Pgf Pgf::poisson(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("poisson pgf: lambda must be positive");
  Pgf g;
  g.kind_ = Kind::poisson;
  g.param_ = lambda;
  return g;
}

Pgf Pgf::coefficients(std::vector<double> p) {
  if (p.empty()) throw std::invalid_argument("coefficient pgf: empty coefficient list");
  double total = 0.0;
  for (double c : p) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("coefficient pgf: negative coefficient");
    total += c;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("coefficient pgf: coefficients sum to " + fmt_double(total));
  }
  Pgf g;
  g.kind_ = Kind::coefficients;
  g.coeffs_ = std::move(p);
  return g;
}

double Pgf::operator()(double z) const {
  switch (kind_) {
    case Kind::deterministic:
      return std::pow(z, param_);
    case Kind::poisson:
      return std::exp(param_ * (z - 1.0));
    case Kind::coefficients: {
      double acc = 0.0;
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
      return acc;
    }
  }
  return 0.0;
}

double Pgf::derivative(double z) const {
  switch (kind_) {
    case Kind::deterministic:
      return param_ == 0.0 ? 0.0 : param_ * std::pow(z, param_ - 1.0);
    case Kind::poisson:
      return param_ * std::exp(param_ * (z - 1.0));
    case Kind::coefficients: {
      double acc = 0.0;
      for (std::size_t d = coeffs_.size(); d-- > 1;) acc = acc * z + static_cast<double>(d) * coeffs_[d];
      return acc;
    }
  }
  return 0.0;
}

Pgf Pgf::shifted_down() const {
  switch (kind_) {
    case Kind::deterministic:
      if (param_ < 1.0) break;
      return deterministic(static_cast<std::size_t>(param_) - 1);
    case Kind::poisson:
      break;
    case Kind::coefficients:
      if (coeffs_[0] != 0.0) break;
      return coefficients(std::vector<double>(coeffs_.begin() + 1, coeffs_.end()));
  }
  throw std::invalid_argument("shifted_down: law has mass at 0");
}

std::string Pgf::describe() const {
  switch (kind_) {
    case Kind::deterministic:
      return "deterministic(" + fmt_double(param_) + ")";
    case Kind::poisson:
      return "poisson(" + fmt_double(param_) + ")";
    case Kind::coefficients: {
      std::string s = "coeffs(";
      for (std::size_t i = 0; i < coeffs_.size(); ++i) s += (i ? "," : "") + fmt_double(coeffs_[i]);
      return s + ")";
    }
  }
  return "?";
}

void validate(const BranchingSpec& spec) {
  const std::size_t t = spec.type_count();
  if (t == 0) throw std::invalid_argument("branching spec: no types");
  if (spec.root.size() != t || spec.offspring.size() != t) {
    throw std::invalid_argument("branching spec: dimension mismatch");
  }
  double total = 0.0;
  for (double w : spec.root) {
    if (!(w >= 0.0)) throw std::invalid_argument("branching spec: negative root weight");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("branching spec: root weights do not sum to 1");
  for (const auto& row : spec.offspring) {
    if (row.size() != t) throw std::invalid_argument("branching spec: offspring row has wrong width");
    for (const auto& g : row) {
      if (g && std::abs((*g)(1.0) - 1.0) > 1e-12) throw std::invalid_argument("branching spec: pgf(1) != 1");
    }
  }
}

namespace {

void rhs_into(const BranchingSpec& spec, std::span<const double> y, std::span<double> out) {
  const std::size_t t = spec.type_count();
  for (std::size_t k = 0; k < t; ++k) {
    double prod = 1.0;
    for (std::size_t j = 0; j < t; ++j) {
      if (const auto& g = spec.offspring[k][j]) prod *= (*g)(1.0 - y[j]);
    }
    out[k] = prod;
  }
}

}  // namespace

std::vector<double> rhs(const BranchingSpec& spec, double /*x*/, std::span<const double> y) {
  if (y.size() != spec.type_count()) throw std::invalid_argument("rhs: state has wrong dimension");
  for (double v : y) {
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("rhs: state outside [0, 1]");
  }
  std::vector<double> out(y.size());
  rhs_into(spec, y, out);
  return out;
}

double OdeSolution::occupancy_at(double x) const {
  const double steps = x / step;
  const double idx = std::round(steps);
  if (!(x >= 0.0) || std::abs(steps - idx) > 1e-9 * std::max(1.0, steps) || idx >= static_cast<double>(grid.size())) {
    throw std::invalid_argument("occupancy_at: x = " + fmt_double(x) + " is not a grid point");
  }
  const auto i = static_cast<std::size_t>(idx);
  double sum = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) sum += y[k][i] * root[k];
  return sum;
}

OdeSolution solve(const BranchingSpec& spec, double step) {
  validate(spec);
  if (!(step > 0.0 && step <= 1.0)) throw std::invalid_argument("solve: step must lie in (0, 1]");
  const double m_real = 1.0 / step;
  const auto m = static_cast<std::size_t>(std::llround(m_real));
  if (m == 0 || std::abs(m_real - static_cast<double>(m)) > 1e-9 * m_real) {
    throw std::invalid_argument("solve: step must be 1/M for an integer M");
  }
  const std::size_t t = spec.type_count();
  const double h = 1.0 / static_cast<double>(m);

  OdeSolution sol;
  sol.step = h;
  sol.root = spec.root;
  sol.grid.resize(m + 1);
  sol.y.assign(t, std::vector<double>(m + 1, 0.0));
  for (std::size_t i = 0; i <= m; ++i) sol.grid[i] = static_cast<double>(i) / static_cast<double>(m);

  std::vector<double> y(t, 0.0), k1(t), k2(t), k3(t), k4(t), tmp(t);
  for (std::size_t i = 0; i < m; ++i) {
    rhs_into(spec, y, k1);
    for (std::size_t k = 0; k < t; ++k) tmp[k] = y[k] + 0.5 * h * k1[k];
    rhs_into(spec, tmp, k2);
    for (std::size_t k = 0; k < t; ++k) tmp[k] = y[k] + 0.5 * h * k2[k];
    rhs_into(spec, tmp, k3);
    for (std::size_t k = 0; k < t; ++k) tmp[k] = y[k] + h * k3[k];
    rhs_into(spec, tmp, k4);
    const double x_next = sol.grid[i + 1];
    for (std::size_t k = 0; k < t; ++k) {
      y[k] += h / 6.0 * (k1[k] + 2.0 * k2[k] + 2.0 * k3[k] + k4[k]);
      if (!(y[k] >= 0.0 && y[k] <= x_next + 10.0 * h)) {
        throw std::runtime_error("solve: y_" + spec.types[k] + " = " + fmt_double(y[k]) + " left [0, x + 10h] at x = " +
                                 fmt_double(x_next));
      }
      sol.y[k][i + 1] = y[k];
    }
  }
  sol.iota = 0.0;
  for (std::size_t k = 0; k < t; ++k) sol.iota += sol.y[k][m] * spec.root[k];
  return sol;
}

double iota(const BranchingSpec& spec, double step) { return solve(spec, step).iota; }

double occupancy_at(const BranchingSpec& spec, double x, double step) { return solve(spec, step).occupancy_at(x); }

BranchingSpec single_type(const Pgf& offspring) {
  return BranchingSpec{{"node"}, {1.0}, {{offspring}}};
}

BranchingSpec iid_degree(const Pgf& degrees) {
  if (degrees.p0() != 0.0) throw std::invalid_argument("iid_degree: degree law must have p0 = 0");
  return BranchingSpec{{"root", "other"}, {1.0, 0.0}, {{std::nullopt, degrees}, {std::nullopt, degrees.shifted_down()}}};
}

namespace {

void require(bool ok, std::string_view name, const std::string& why) {
  if (!ok) throw std::invalid_argument(std::string(name) + ": " + why);
}

}  // namespace

BranchingSpec preset(std::string_view name, const PresetParams& p) {
  if (name == "infinite_ray_star") {
    require(p.d >= 1, name, "d must be at least 1");
    return BranchingSpec{{"root", "branch"},
                         {1.0, 0.0},
                         {{std::nullopt, Pgf::deterministic(p.d)}, {std::nullopt, Pgf::deterministic(1)}}};
  }
  if (name == "poisson_gw") {
    require(p.lambda > 0.0, name, "lambda must be positive");
    return single_type(Pgf::poisson(p.lambda));
  }
  if (name == "size_biased_gw") {
    require(p.lambda > 0.0 && p.lambda <= 1.0, name, "lambda must lie in (0, 1]");
    return BranchingSpec{{"spine", "tree"},
                         {1.0, 0.0},
                         {{Pgf::deterministic(1), Pgf::poisson(p.lambda)}, {std::nullopt, Pgf::poisson(p.lambda)}}};
  }
  if (name == "d_ary") {
    require(p.d >= 1, name, "d must be at least 1");
    return single_type(Pgf::deterministic(p.d));
  }
  if (name == "d_regular") {
    require(p.d >= 3, name, "d must be at least 3");
    return iid_degree(Pgf::deterministic(p.d));
  }
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

double closed_form(std::string_view name, const PresetParams& p) {
  const double lambda = p.lambda;
  const auto d = static_cast<double>(p.d);
  if (name == "infinite_ray_star") {
    require(p.d >= 1, name, "d must be at least 1");
    return (1.0 - std::exp(-d)) / d;
  }
  if (name == "poisson_gw") {
    require(lambda > 0.0, name, "lambda must be positive");
    return std::log1p(lambda) / lambda;
  }
  if (name == "size_biased_gw") {
    require(lambda > 0.0 && lambda <= 1.0, name, "lambda must lie in (0, 1]");
    return 1.0 - std::pow(1.0 + lambda, -1.0 / lambda);
  }
  if (name == "d_ary") {
    require(p.d >= 1, name, "d must be at least 1");
    // d = 1 is the one-sided ray, the d -> 1 limit of the general formula.
    if (p.d == 1) return 1.0 - std::exp(-1.0);
    return 1.0 - std::pow(d, -1.0 / (d - 1.0));
  }
  if (name == "d_regular") {
    require(p.d >= 3, name, "d must be at least 3");
    return 0.5 * (1.0 - std::pow(d - 1.0, -2.0 / (d - 2.0)));
  }
  throw std::invalid_argument("unknown closed form '" + std::string(name) + "'");
}

std::vector<ConstantEntry> constants_table() {
  std::vector<ConstantEntry> out;
  for (std::size_t d = 1; d <= 6; ++d) {
    out.push_back({"infinite_ray_star", "d=" + std::to_string(d), "(1-exp(-d))/d",
                   closed_form("infinite_ray_star", {1.0, d})});
  }
  for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
    out.push_back({"poisson_gw", "lambda=" + fmt_double(lambda), "ln(1+lambda)/lambda",
                   closed_form("poisson_gw", {lambda, 2})});
  }
  out.push_back({"size_biased_gw", "lambda=1", "1-(1+lambda)^(-1/lambda)", closed_form("size_biased_gw", {1.0, 2})});
  for (std::size_t d = 2; d <= 6; ++d) {
    out.push_back({"d_ary", "d=" + std::to_string(d), "1-d^(-1/(d-1))", closed_form("d_ary", {1.0, d})});
  }
  for (std::size_t d = 3; d <= 6; ++d) {
    out.push_back({"d_regular", "d=" + std::to_string(d), "(1-(d-1)^(-2/(d-2)))/2", closed_form("d_regular", {1.0, d})});
  }
  return out;
}

}  // namespace gmis
