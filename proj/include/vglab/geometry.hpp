#pragma once

#include <vector>

#include "vglab/constants.hpp"
#include "vglab/profile.hpp"
#include "vglab/quadrature.hpp"

namespace vglab {

enum class MetricKind { Cone, Line };
enum class CurvatureQuantity { SigmaMinus, Ricm };

// Model metric dt^2 + warp(t)^2 dtheta^2. Cone metrics live on [0, ...) with
// warp(0) = 0, warp'(0) = 1 (rotationally symmetric R^n); Line metrics live
// on all of R with warp > 0 (two-ended warped product over S^{n-1}).
struct ModelMetric {
  int n = 3;
  MetricKind kind = MetricKind::Cone;
  Profile warp;
  // cubic coefficient of the origin expansion warp = t + a3 t^3 + O(t^5)
  double origin_cubic = 0;
  // curvature vanishes (or is declared negligible) for |t| >= flat_beyond;
  // curvature integrals stop there
  double flat_beyond = kInf;
};

struct CurvatureSample {
  double k_rad = 0;       // sectional curvature of planes containing d/dt
  double k_tan = 0;       // sectional curvature of planes tangent to the sphere
  double ric_rad = 0;     // Ricci in the radial direction
  double ric_tan = 0;     // Ricci in a tangential direction
  double scal = 0;        // scalar curvature
  double sigma_minus = 0; // negative part of the lowest sectional curvature
  double ricm = 0;        // negative part of the lowest Ricci eigenvalue
  double rho = 0;         // lowest Ricci eigenvalue, signed
};

CurvatureSample curvature_at(const ModelMetric& m, double t);
// one-sided variant for sampling at knots (side < 0 takes the left limit)
CurvatureSample curvature_side(const ModelMetric& m, double t, int side);

double volume_density(const ModelMetric& m, double t);

// Cone only: volume of the geodesic ball of radius r about the pole.
double ball_volume(const ModelMetric& m, double r, const QuadratureSpec& spec = {});

// Line only: volume of the slab {a <= t <= b}.
double slab_volume(const ModelMetric& m, double a, double b, const QuadratureSpec& spec = {});

// integral of quantity^{p/2} over the metric's curvature support
double curvature_lp_integral(const ModelMetric& m, double p, CurvatureQuantity which,
                             const QuadratureSpec& spec = {});

// finite-difference second derivative of the level-sphere area minus the
// second-variation integrand; identically zero for valid Cone metrics
double second_variation_residual(const ModelMetric& m, double r);

// integral of (induced scalar curvature - (n-1) * lowest Ricci) over the
// level sphere, minus the analytic area second derivative; nonnegative
double ricci_majorant_gap(const ModelMetric& m, double r);

// warp(t) -> c * warp(t/c); distances scale by c
ModelMetric rescale_metric(const ModelMetric& m, double c);

struct EvgRow {
  double r = 0, vol = 0, ratio = 0;  // ratio = vol / (omega_n r^n)
};
std::vector<EvgRow> evg_report(const ModelMetric& m, const std::vector<double>& radii,
                               const QuadratureSpec& spec = {});

// --- model zoo -------------------------------------------------------------

ModelMetric euclidean_metric(int n);
ModelMetric sphere_metric(int n);
ModelMetric hyperbolic_metric(int n);
// sinh warp up to t_hyp, then a concave C^2 taper down to slope 1; exactly
// flat beyond t_flat (requires t_hyp < t_flat)
ModelMetric tapered_hyperbolic_metric(int n, double t_hyp, double t_flat);
// nonpositively curved funnel: slope rises smoothly from 1 to `slope` across
// [t0, t1], convex warp, asymptotically conical
ModelMetric funnel_metric(int n, double slope, double t0, double t1);
// Euclidean plus a compactly supported C^3 bump on [1, 2] of size eps
ModelMetric bump_metric(int n, double eps);
// warp f(r) = asinh(r): nonnegative Ricci, non-constant curvature
ModelMetric asinh_metric(int n);

}  // namespace vglab
