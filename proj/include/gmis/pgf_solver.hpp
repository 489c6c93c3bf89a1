#pragma once

#include <functional>

#include "gmis/branching_ode.hpp"

namespace gmis {

/// Offspring (single type) or degree (iid variant) law for the pgf shortcut.
struct PgfSpec {
  Pgf g;
  bool iid = false;  // iid-degree tree; requires g(0) = 0
};

/// Throws std::invalid_argument when g(1) != 1 or, for the iid variant,
/// g(0) != 0.
void validate(const PgfSpec& spec);

/// Adaptive Simpson quadrature of f on [a, b] to absolute tolerance `tol`.
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-12);

/// Lower end of the bisection bracket; the integrand is never evaluated
/// below it.
inline constexpr double kPgfFloor = 1e-6;

/// h(x) solving  int_h^1 dz / g(z) = x,  x in [0, 1]. Then the single-type
/// occupancy is y(x) = 1 - h(x). Throws std::domain_error if the root would
/// lie below kPgfFloor.
double solve_h(const PgfSpec& spec, double x);

/// h(x) solving  int_h^1 z dz / g(z) = x  for the iid-degree variant; the
/// root occupancy is (1 - h^2) / 2.
double solve_h_iid(const PgfSpec& spec, double x);

/// 1 - h(1).
double iota_single(const PgfSpec& spec);
/// (1 - h_iid(1)^2) / 2.
double iota_iid(const PgfSpec& spec);

/// Dispatches on spec.iid.
double iota_pgf(const PgfSpec& spec);

}  // namespace gmis
