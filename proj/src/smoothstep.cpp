#include "vglab/smoothstep.hpp"

#include <vector>

namespace vglab {

namespace {

Jet bump(const Jet& s) {
  if (s.v <= 0) return Jet{0, 0, 0, 0};
  return exp(-(1.0 / s));
}

// fixed 7-point Gauss-Legendre rule on [a, b]
double gl7(double (*fn)(double), double a, double b) {
  static const double x[7] = {-0.949107912342758524526189684047851,
                              -0.741531185599394439863864773280788,
                              -0.405845151377397166906606412076961,
                              0.0,
                              0.405845151377397166906606412076961,
                              0.741531185599394439863864773280788,
                              0.949107912342758524526189684047851};
  static const double w[7] = {0.129484966168869693270611432679082,
                              0.279705391489276667901467771423780,
                              0.381830050505118944950369775488975,
                              0.417959183673469387755102040816327,
                              0.381830050505118944950369775488975,
                              0.279705391489276667901467771423780,
                              0.129484966168869693270611432679082};
  double c = 0.5 * (a + b), h = 0.5 * (b - a), acc = 0;
  for (int i = 0; i < 7; ++i) acc += w[i] * fn(c + h * x[i]);
  return acc * h;
}

Profile cumulative_table(double (*fn)(double), double lo, double hi) {
  const int cells = 2048;
  std::vector<double> t(cells + 1), y(cells + 1), f(cells + 1);
  double acc = 0;
  for (int i = 0; i <= cells; ++i) {
    t[i] = lo + (hi - lo) * i / cells;
    if (i > 0) acc += gl7(fn, t[i - 1], t[i]);
    y[i] = acc;
    f[i] = fn(t[i]);
  }
  return hermite_table_profile(std::move(t), std::move(y), std::move(f), {});
}

}  // namespace

Jet step_down_jet(double t) {
  if (t <= -1) return Jet{1, 0, 0, 0};
  if (t >= 1) return Jet{0, 0, 0, 0};
  Jet T = Jet::var(t);
  Jet a = bump(1.0 - T);
  Jet b = bump(1.0 + T);
  return a / (a + b);
}

Jet step_up01_jet(double u) {
  Jet s = step_down_jet(2.0 * u - 1.0);
  // chain rule through the affine substitution
  return Jet{1.0 - s.v, -2.0 * s.d1, -4.0 * s.d2, -8.0 * s.d3};
}

double step_down_integral(double t) {
  static const Profile table = cumulative_table(&step_down, -1.0, 1.0);
  if (t <= -1) return 0.0;
  if (t >= 1) return table(1.0);
  return table(t);
}

double step_up01_integral(double u) {
  static const Profile table = cumulative_table(&step_up01, 0.0, 1.0);
  if (u <= 0) return 0.0;
  if (u >= 1) return table(1.0) + (u - 1.0);  // integrand is exactly 1 beyond
  return table(u);
}

}  // namespace vglab
