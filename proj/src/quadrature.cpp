#include "vglab/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace vglab {

namespace {

// 15-point Kronrod extension of 7-point Gauss (nodes on [-1, 1]).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  double integral;
  double error;
};

PanelEstimate gauss_kronrod(const std::function<double(double)>& fn, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = fn(c);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    double x = h * kXgk[j];
    double f1 = fn(c - x), f2 = fn(c + x);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  return {resk * h, std::fabs((resk - resg) * h)};
}

double refine(const std::function<double(double)>& fn, double a, double b, double tol, int depth,
              int max_depth) {
  PanelEstimate e = gauss_kronrod(fn, a, b);
  if (e.error <= tol || b - a < 1e-15 * std::max(1.0, std::fabs(a)))
    return e.integral;
  if (depth >= max_depth)
    throw ConvergenceError("integrate: max depth reached without meeting tolerance");
  double m = 0.5 * (a + b);
  return refine(fn, a, m, 0.5 * tol, depth + 1, max_depth) +
         refine(fn, m, b, 0.5 * tol, depth + 1, max_depth);
}

std::vector<double> panel_bounds(double a, double b, const std::vector<double>& knots) {
  std::vector<double> bounds;
  bounds.push_back(a);
  for (double k : knots)
    if (k > a && k < b) bounds.push_back(k);
  bounds.push_back(b);
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  return bounds;
}

double integrate_on_bounds(const std::function<double(double)>& fn,
                           const std::vector<double>& bounds, const QuadratureSpec& spec) {
  double coarse = 0;
  std::vector<PanelEstimate> est(bounds.size() - 1);
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    est[i] = gauss_kronrod(fn, bounds[i], bounds[i + 1]);
    coarse += est[i].integral;
  }
  double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(coarse));
  double total_w = bounds.back() - bounds.front();
  double n_seg = static_cast<double>(bounds.size() - 1);
  double result = 0;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    double w = bounds[i + 1] - bounds[i];
    // budget: proportional to width, floored at an even split across segments
    double share = 0.5 * tol * std::max(w / total_w, 1.0 / n_seg);
    result += refine(fn, bounds[i], bounds[i + 1], share, 0, spec.max_depth);
  }
  return result;
}

}  // namespace

double integrate(const std::function<double(double)>& fn, double a, double b,
                 const QuadratureSpec& spec, const std::vector<double>& knots) {
  if (!(a <= b)) throw DomainError("integrate: requires a <= b");
  if (a == b) return 0.0;
  return integrate_on_bounds(fn, panel_bounds(a, b, knots), spec);
}

double integrate_geometric(const std::function<double(double)>& fn, double a, double b,
                           const QuadratureSpec& spec, const std::vector<double>& knots) {
  if (!(a <= b)) throw DomainError("integrate: requires a <= b");
  if (a == b) return 0.0;
  std::vector<double> ladder = knots;
  for (double x = 1e-6; x < b && std::isfinite(x); x *= 10.0)
    if (x > a) ladder.push_back(x);
  for (double x = -1e-6; x > a && std::isfinite(x); x *= 10.0)
    if (x < b) ladder.push_back(x);
  return integrate_on_bounds(fn, panel_bounds(a, b, ladder), spec);
}

double bracket_root(const std::function<double(double)>& fn, double a, double b, double tol) {
  double fa = fn(a), fb = fn(b);
  if (fa == 0) return a;
  if (fb == 0) return b;
  if (fa * fb > 0) throw BracketError("bracket_root: fn(a) and fn(b) have the same sign");
  for (int it = 0; it < 2000 && (b - a) > tol; ++it) {
    double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;  // bracket at floating-point resolution
    double fm = fn(m);
    if (fm == 0) return m;
    if (fa * fm < 0) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace vglab
