#include "vglab/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "vglab/smoothstep.hpp"

namespace vglab {

namespace {

constexpr double kOriginEps = 1e-6;  // analytic substitution zone at the pole

CurvatureSample from_warp_jet(const ModelMetric& m, const Jet& f, bool near_origin,
                              double origin_cubic) {
  CurvatureSample s;
  int n = m.n;
  if (near_origin) {
    double k = -6.0 * origin_cubic;
    s.k_rad = k;
    s.k_tan = k;
  } else {
    s.k_rad = -f.d2 / f.v;
    // (1 - f'^2) written as a product to avoid cancellation near f' = 1
    s.k_tan = (1.0 - f.d1) * (1.0 + f.d1) / (f.v * f.v);
  }
  s.ric_rad = (n - 1) * s.k_rad;
  s.ric_tan = s.k_rad + (n - 2) * s.k_tan;
  s.scal = 2.0 * (n - 1) * s.k_rad + (n - 1) * (n - 2) * s.k_tan;
  s.rho = std::min(s.ric_rad, s.ric_tan);
  s.ricm = std::max(0.0, -s.rho);
  s.sigma_minus = std::max(0.0, -std::min(s.k_rad, s.k_tan));
  return s;
}

}  // namespace

CurvatureSample curvature_side(const ModelMetric& m, double t, int side) {
  bool near_origin = false;
  if (m.kind == MetricKind::Cone) {
    if (t < 0) throw DomainError("curvature_at: t < 0 on a Cone metric");
    near_origin = t < kOriginEps;
  }
  Jet f;
  if (!near_origin) {
    const Profile::Piece& p = m.warp.piece_containing(t, side);
    f = p.eval(std::min(std::max(t, p.lo), p.hi));
    if (!(f.v > 0)) throw DomainError("curvature_at: warp must be positive");
  }
  return from_warp_jet(m, f, near_origin, m.origin_cubic);
}

CurvatureSample curvature_at(const ModelMetric& m, double t) {
  return curvature_side(m, t, +1);
}

double volume_density(const ModelMetric& m, double t) {
  double f = m.warp(t);
  return std::pow(f, m.n - 1);
}

double ball_volume(const ModelMetric& m, double r, const QuadratureSpec& spec) {
  if (m.kind != MetricKind::Cone) throw DomainError("ball_volume: Cone metrics only");
  if (r < 0 || r > m.warp.hi()) throw DomainError("ball_volume: radius outside domain");
  DimensionConstants dc = dim_constants(m.n);
  int nm1 = m.n - 1;
  if (r <= kOriginEps) return dc.sigma_nm1 * std::pow(r, m.n) / m.n;
  // leading origin behaviour warp ~ t substituted analytically on [0, eps]
  double head = std::pow(kOriginEps, m.n) / m.n;
  auto fn = [&](double t) { return std::pow(m.warp(t), nm1); };
  double tail = (r > 1e9)
                    ? integrate_geometric(fn, kOriginEps, r, spec, m.warp.knots())
                    : integrate(fn, kOriginEps, r, spec, m.warp.knots());
  return dc.sigma_nm1 * (head + tail);
}

double slab_volume(const ModelMetric& m, double a, double b, const QuadratureSpec& spec) {
  if (m.kind != MetricKind::Line) throw DomainError("slab_volume: Line metrics only");
  if (!(a <= b)) throw DomainError("slab_volume: requires a <= b");
  DimensionConstants dc = dim_constants(m.n);
  int nm1 = m.n - 1;
  auto fn = [&](double t) { return std::pow(m.warp(t), nm1); };
  double span = b - a;
  double v = (span > 1e9) ? integrate_geometric(fn, a, b, spec, m.warp.knots())
                          : integrate(fn, a, b, spec, m.warp.knots());
  return dc.sigma_nm1 * v;
}

double curvature_lp_integral(const ModelMetric& m, double p, CurvatureQuantity which,
                             const QuadratureSpec& spec) {
  DimensionConstants dc = dim_constants(m.n);
  double support = std::min(m.flat_beyond, m.warp.hi());
  if (!(support < kInf))
    throw ConvergenceError("curvature_lp_integral: no declared curvature support");
  if (support <= 0) return 0.0;
  int nm1 = m.n - 1;
  auto q_of = [&](double t) {
    CurvatureSample s = curvature_at(m, t);
    return which == CurvatureQuantity::SigmaMinus ? s.sigma_minus : s.ricm;
  };
  auto fn = [&](double t) {
    double q = q_of(t);
    if (q <= 0) return 0.0;
    double f = m.warp(t);
    if (f <= 0) return 0.0;
    // log-stable: q^{p/2} f^{n-1}
    double le = 0.5 * p * std::log(q) + nm1 * std::log(f);
    return (le < -745.0) ? 0.0 : std::exp(le);
  };
  if (m.kind == MetricKind::Cone) {
    // origin head with warp ~ t and the limiting curvature value
    double q0 = q_of(0.5 * kOriginEps);
    double head = (q0 > 0) ? std::pow(q0, 0.5 * p) * std::pow(kOriginEps, m.n) / m.n : 0.0;
    double tail = integrate_geometric(fn, kOriginEps, support, spec, m.warp.knots());
    return dc.sigma_nm1 * (head + tail);
  }
  double v = integrate_geometric(fn, -support, support, spec, m.warp.knots());
  return dc.sigma_nm1 * v;
}

namespace {

double area_of(const ModelMetric& m, double r) {
  DimensionConstants dc = dim_constants(m.n);
  return dc.sigma_nm1 * std::pow(m.warp(r), m.n - 1);
}

double area_second_derivative_analytic(const ModelMetric& m, double r) {
  DimensionConstants dc = dim_constants(m.n);
  Jet f = m.warp.jet(r);
  int n = m.n;
  return dc.sigma_nm1 * (n - 1) *
         ((n - 2) * std::pow(f.v, n - 3) * f.d1 * f.d1 + std::pow(f.v, n - 2) * f.d2);
}

}  // namespace

double second_variation_residual(const ModelMetric& m, double r) {
  if (m.kind != MetricKind::Cone) throw DomainError("second_variation_residual: Cone only");
  if (!(r > 0) || r >= m.warp.hi()) throw DomainError("second_variation_residual: bad radius");
  // keep the finite-difference stencil inside one smooth piece
  double h = 1e-3 * std::max(0.1, std::fabs(r));
  double gap = m.warp.hi() - r;
  for (double k : m.warp.knots())
    if (k > 0) gap = std::min(gap, std::fabs(k - r));
  gap = std::min(gap, r);
  if (gap < 8 * 1e-7) throw DomainError("second_variation_residual: too close to a knot");
  h = std::min(h, 0.45 * gap);
  auto area = [&](double t) { return area_of(m, t); };
  auto fd2 = [&](double hh) { return (area(r - hh) - 2 * area(r) + area(r + hh)) / (hh * hh); };
  double a2 = (4 * fd2(0.5 * h) - fd2(h)) / 3.0;  // Richardson, O(h^4)

  DimensionConstants dc = dim_constants(m.n);
  Jet f = m.warp.jet(r);
  int n = m.n;
  double mean_curv = (n - 1) * f.d1 / f.v;
  double ii_sq = (n - 1) * (f.d1 / f.v) * (f.d1 / f.v);
  double ric_nn = -(n - 1) * f.d2 / f.v;
  double integral = dc.sigma_nm1 * std::pow(f.v, n - 1) *
                    (mean_curv * mean_curv - ii_sq - ric_nn);
  return a2 - integral;
}

double ricci_majorant_gap(const ModelMetric& m, double r) {
  if (m.kind != MetricKind::Cone) throw DomainError("ricci_majorant_gap: Cone only");
  DimensionConstants dc = dim_constants(m.n);
  CurvatureSample s = curvature_at(m, r);
  double f = m.warp(r);
  int n = m.n;
  double induced_scal = (n - 1) * (n - 2) / (f * f);
  double majorant = dc.sigma_nm1 * std::pow(f, n - 1) * (induced_scal - (n - 1) * s.rho);
  return majorant - area_second_derivative_analytic(m, r);
}

ModelMetric rescale_metric(const ModelMetric& m, double c) {
  if (!(c > 0)) throw ParamError("rescale_metric: c must be positive");
  ModelMetric out = m;
  out.warp = stretch_profile(m.warp, c);
  out.origin_cubic = m.origin_cubic / (c * c);
  out.flat_beyond = m.flat_beyond * c;
  return out;
}

std::vector<EvgRow> evg_report(const ModelMetric& m, const std::vector<double>& radii,
                               const QuadratureSpec& spec) {
  DimensionConstants dc = dim_constants(m.n);
  std::vector<EvgRow> rows;
  rows.reserve(radii.size());
  for (double r : radii) {
    double v = ball_volume(m, r, spec);
    rows.push_back({r, v, v / (dc.omega_n * std::pow(r, m.n))});
  }
  return rows;
}

// --- model zoo --------------------------------------------------------------

ModelMetric euclidean_metric(int n) {
  ModelMetric m;
  m.n = n;
  m.kind = MetricKind::Cone;
  m.warp = Profile::analytic(0, kInf, 3, [](double t) { return Jet::var(t); });
  m.origin_cubic = 0;
  m.flat_beyond = 0;
  return m;
}

ModelMetric sphere_metric(int n) {
  ModelMetric m;
  m.n = n;
  m.kind = MetricKind::Cone;
  m.warp = Profile::analytic(0, M_PI, 3, [](double t) { return sin(Jet::var(t)); });
  m.origin_cubic = -1.0 / 6.0;
  m.flat_beyond = M_PI;
  return m;
}

ModelMetric hyperbolic_metric(int n) {
  ModelMetric m;
  m.n = n;
  m.kind = MetricKind::Cone;
  m.warp = Profile::analytic(0, kInf, 3, [](double t) { return sinh(Jet::var(t)); });
  m.origin_cubic = 1.0 / 6.0;
  m.flat_beyond = kInf;
  return m;
}

ModelMetric tapered_hyperbolic_metric(int n, double t_hyp, double t_flat) {
  if (!(0 < t_hyp && t_hyp < t_flat)) throw ParamError("tapered_hyperbolic_metric: bad knots");
  double width = t_flat - t_hyp;
  double excess = std::cosh(t_hyp) - 1.0;  // slope above 1 to be removed
  double f_hyp = std::sinh(t_hyp);
  // slope(t) = 1 + excess * step_up01((t_flat - t) / width), decreasing
  auto slope_jet = [=](double t) {
    Jet u{(t_flat - t) / width, -1.0 / width, 0, 0};
    Jet s = step_up01_jet(u.v);
    Jet su = compose(s.v, s.d1, s.d2, s.d3, u);
    return 1.0 + excess * su;
  };
  double ramp_full = step_up01_integral(1.0);
  auto value_at = [=](double t) {
    // f(t) = f_hyp + (t - t_hyp) + excess * width * (ramp_full - ramp((t_flat-t)/width))
    return f_hyp + (t - t_hyp) +
           excess * width * (ramp_full - step_up01_integral((t_flat - t) / width));
  };
  double f_flat = value_at(t_flat);
  std::vector<Profile::Piece> ps;
  ps.push_back({0, t_hyp, 3, [](double t) { return sinh(Jet::var(t)); }});
  ps.push_back({t_hyp, t_flat, 3, [=](double t) {
                  Jet s = slope_jet(t);
                  return Jet{value_at(t), s.v, s.d1, s.d2};
                }});
  ps.push_back({t_flat, kInf, 3, [=](double t) { return Jet{f_flat + (t - t_flat), 1, 0, 0}; }});
  ModelMetric m;
  m.n = n;
  m.kind = MetricKind::Cone;
  m.warp = Profile(0, kInf, std::move(ps), 1);
  m.origin_cubic = 1.0 / 6.0;
  m.flat_beyond = t_flat;
  return m;
}

ModelMetric funnel_metric(int n, double slope, double t0, double t1) {
  if (!(slope >= 1.0 && 0 < t0 && t0 < t1)) throw ParamError("funnel_metric: bad parameters");
  double excess = slope - 1.0;
  double width = t1 - t0;
  auto slope_jet = [=](double t) {
    Jet u{(t - t0) / width, 1.0 / width, 0, 0};
    Jet s = step_up01_jet(u.v);
    Jet su = compose(s.v, s.d1, s.d2, s.d3, u);
    return 1.0 + excess * su;
  };
  auto value_at = [=](double t) {
    return t + excess * width * step_up01_integral((t - t0) / width);
  };
  double f1 = value_at(t1);
  std::vector<Profile::Piece> ps;
  ps.push_back({0, t0, 3, [](double t) { return Jet::var(t); }});
  ps.push_back({t0, t1, 3, [=](double t) {
                  Jet s = slope_jet(t);
                  return Jet{value_at(t), s.v, s.d1, s.d2};
                }});
  ps.push_back({t1, kInf, 3, [=](double t) { return Jet{f1 + slope * (t - t1), slope, 0, 0}; }});
  ModelMetric m;
  m.n = n;
  m.kind = MetricKind::Cone;
  m.warp = Profile(0, kInf, std::move(ps), 1);
  m.origin_cubic = 0;
  m.flat_beyond = kInf;  // tangential curvature decays like 1/t^2, never exactly flat
  return m;
}

ModelMetric bump_metric(int n, double eps) {
  // C^3 compact bump ((r-1)(2-r))^4 / norm on [1, 2]
  auto bump = [](double r) {
    Jet x = Jet::var(r);
    Jet g = (x - 1.0) * (2.0 - x);
    return pow(g, 4.0) * 256.0;  // normalized so the peak is 1
  };
  std::vector<Profile::Piece> ps;
  ps.push_back({0, 1, 3, [](double t) { return Jet::var(t); }});
  ps.push_back({1, 2, 3, [=](double t) { return Jet::var(t) + eps * bump(t); }});
  ps.push_back({2, kInf, 3, [](double t) { return Jet::var(t); }});
  ModelMetric m;
  m.n = n;
  m.kind = MetricKind::Cone;
  m.warp = Profile(0, kInf, std::move(ps), 3);
  m.origin_cubic = 0;
  m.flat_beyond = 2.0;
  return m;
}

ModelMetric asinh_metric(int n) {
  ModelMetric m;
  m.n = n;
  m.kind = MetricKind::Cone;
  m.warp = Profile::analytic(0, kInf, 3, [](double t) {
    Jet x = Jet::var(t);
    Jet d = 1.0 / sqrt(1.0 + x * x);  // f' = (1+t^2)^{-1/2}
    return Jet{std::asinh(t), d.v, d.d1, d.d2};
  });
  m.origin_cubic = -1.0 / 6.0;
  m.flat_beyond = kInf;
  return m;
}

}  // namespace vglab
