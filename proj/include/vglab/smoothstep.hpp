#pragma once

#include "vglab/jet.hpp"
#include "vglab/profile.hpp"

namespace vglab {

// C^infty transition built from the standard exponential bump
// b(s) = exp(-1/s) (s > 0, else 0). step_down goes 1 -> 0 across [-1, 1],
// is flat at both ends, and satisfies step_down(t) + step_down(-t) = 1.
Jet step_down_jet(double t);
inline double step_down(double t) { return step_down_jet(t).v; }

// rising companion on [0, 1]: 0 -> 1, flat ends
Jet step_up01_jet(double u);
inline double step_up01(double u) { return step_up01_jet(u).v; }

// antiderivative of step_down over [-1, 1], I(-1) = 0; I(1) = 1 by symmetry
double step_down_integral(double t);

// antiderivative of step_up01 over [0, 1], J(0) = 0
double step_up01_integral(double u);

}  // namespace vglab
