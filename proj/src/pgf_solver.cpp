#include "gmis/pgf_solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gmis {

void validate(const PgfSpec& spec) {
  if (std::abs(spec.g(1.0) - 1.0) > 1e-12) throw std::invalid_argument("pgf: g(1) != 1");
  if (spec.iid && spec.g(0.0) != 0.0) throw std::invalid_argument("pgf: iid-degree law needs p0 = 0");
}

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                    double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  // The relative test stops refinement once the absolute target is below
  // double precision, e.g. for 1/z^d near the floor.
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol || std::abs(delta) <= 1e-14 * std::abs(left + right)) {
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// F(h) = int_h^1 w(z)/g(z) dz - x, strictly decreasing in h; bisect for F = 0.
double bisect_root(const PgfSpec& spec, double x, bool weighted) {
  validate(spec);
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("solve_h: x must lie in [0, 1]");
  if (x == 0.0) return 1.0;
  const auto integrand = [&](double z) { return (weighted ? z : 1.0) / spec.g(z); };
  const auto residual = [&](double h) { return integrate(integrand, h, 1.0) - x; };

  double lo = kPgfFloor;
  double hi = 1.0;
  if (residual(lo) < 0.0) {
    throw std::domain_error("solve_h: integral from " + std::to_string(kPgfFloor) +
                            " to 1 does not reach x = " + std::to_string(x));
  }
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (residual(mid) > 0.0) lo = mid;
    else hi = mid;
  }
  const double h = 0.5 * (lo + hi);
  if (std::abs(residual(h)) > 1e-10) throw std::runtime_error("solve_h: residual above 1e-10");
  return h;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_step(f, a, b, fa, fm, fb, whole, tol, 50);
}

double solve_h(const PgfSpec& spec, double x) { return bisect_root(spec, x, false); }

double solve_h_iid(const PgfSpec& spec, double x) {
  if (!spec.iid) throw std::invalid_argument("solve_h_iid: spec is not an iid-degree law");
  return bisect_root(spec, x, true);
}

double iota_single(const PgfSpec& spec) { return 1.0 - solve_h(spec, 1.0); }

double iota_iid(const PgfSpec& spec) {
  const double h = solve_h_iid(spec, 1.0);
  return 0.5 * (1.0 - h * h);
}

double iota_pgf(const PgfSpec& spec) { return spec.iid ? iota_iid(spec) : iota_single(spec); }

}  // namespace gmis
