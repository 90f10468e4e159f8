#pragma once

#include <functional>
#include <vector>

#include "vglab/errors.hpp"

namespace vglab {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_depth = 60;
};

// Adaptive Gauss-Kronrod integration of fn over [a, b]. Initial panels are
// split at the supplied knots, so panels never straddle a breakpoint of a
// piecewise integrand. Error target: max(abs_tol, rel_tol * |result|).
double integrate(const std::function<double(double)>& fn, double a, double b,
                 const QuadratureSpec& spec = {}, const std::vector<double>& knots = {});

// Same, with [a, b] additionally pre-split on a geometric ladder so that
// integrals spanning many decades converge in bounded depth.
double integrate_geometric(const std::function<double(double)>& fn, double a, double b,
                           const QuadratureSpec& spec = {},
                           const std::vector<double>& knots = {});

// Deterministic bisection. Requires fn(a) * fn(b) <= 0.
double bracket_root(const std::function<double(double)>& fn, double a, double b, double tol);

}  // namespace vglab
