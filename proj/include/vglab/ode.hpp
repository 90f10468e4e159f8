#pragma once

#include <functional>
#include <vector>

#include "vglab/profile.hpp"
#include "vglab/quadrature.hpp"

namespace vglab {

// Scalar initial-value problem y' = rhs(t, y), integrated from t0 to t1
// (either direction) with classical RK4 and step-doubling control. Steps are
// clipped so they never straddle a knot. Returns the dense solution as a
// Hermite-table profile over [min(t0,t1), max(t0,t1)].
Profile integrate_ode_scalar(const std::function<double(double, double)>& rhs, double t0,
                             double y0, double t1, const std::vector<double>& knots = {},
                             const QuadratureSpec& spec = {});

}  // namespace vglab
