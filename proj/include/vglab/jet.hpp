#pragma once

#include <cmath>

namespace vglab {

// Truncated Taylor arithmetic: value plus derivatives up to order 3 with
// respect to one scalar variable. Analytic profile pieces are written as
// expressions in Jet so their derivatives come out exact.
struct Jet {
  double v = 0, d1 = 0, d2 = 0, d3 = 0;

  static Jet var(double t) { return {t, 1, 0, 0}; }
  static Jet cst(double c) { return {c, 0, 0, 0}; }
};

inline Jet operator+(const Jet& a, const Jet& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}
inline Jet operator-(const Jet& a, const Jet& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}
inline Jet operator-(const Jet& a) { return {-a.v, -a.d1, -a.d2, -a.d3}; }
inline Jet operator*(const Jet& a, const Jet& b) {
  return {a.v * b.v,
          a.d1 * b.v + a.v * b.d1,
          a.d2 * b.v + 2 * a.d1 * b.d1 + a.v * b.d2,
          a.d3 * b.v + 3 * a.d2 * b.d1 + 3 * a.d1 * b.d2 + a.v * b.d3};
}
inline Jet operator*(double c, const Jet& a) { return {c * a.v, c * a.d1, c * a.d2, c * a.d3}; }
inline Jet operator*(const Jet& a, double c) { return c * a; }
inline Jet operator+(const Jet& a, double c) { return {a.v + c, a.d1, a.d2, a.d3}; }
inline Jet operator+(double c, const Jet& a) { return a + c; }
inline Jet operator-(const Jet& a, double c) { return {a.v - c, a.d1, a.d2, a.d3}; }
inline Jet operator-(double c, const Jet& a) { return {c - a.v, -a.d1, -a.d2, -a.d3}; }

// Composition with a univariate function given by its derivatives at a.v
// (Faa di Bruno through order 3).
inline Jet compose(double f0, double f1, double f2, double f3, const Jet& g) {
  Jet r;
  r.v = f0;
  r.d1 = f1 * g.d1;
  r.d2 = f2 * g.d1 * g.d1 + f1 * g.d2;
  r.d3 = f3 * g.d1 * g.d1 * g.d1 + 3 * f2 * g.d1 * g.d2 + f1 * g.d3;
  return r;
}

inline Jet inv(const Jet& a) {
  double u = a.v;
  return compose(1.0 / u, -1.0 / (u * u), 2.0 / (u * u * u), -6.0 / (u * u * u * u), a);
}
inline Jet operator/(const Jet& a, const Jet& b) { return a * inv(b); }
inline Jet operator/(const Jet& a, double c) { return (1.0 / c) * a; }
inline Jet operator/(double c, const Jet& a) { return c * inv(a); }

inline Jet exp(const Jet& a) {
  double e = std::exp(a.v);
  return compose(e, e, e, e, a);
}
inline Jet log(const Jet& a) {
  double u = a.v;
  return compose(std::log(u), 1.0 / u, -1.0 / (u * u), 2.0 / (u * u * u), a);
}
inline Jet sin(const Jet& a) {
  double s = std::sin(a.v), c = std::cos(a.v);
  return compose(s, c, -s, -c, a);
}
inline Jet cos(const Jet& a) {
  double s = std::sin(a.v), c = std::cos(a.v);
  return compose(c, -s, -c, s, a);
}
inline Jet sinh(const Jet& a) {
  double s = std::sinh(a.v), c = std::cosh(a.v);
  return compose(s, c, s, c, a);
}
inline Jet cosh(const Jet& a) {
  double s = std::sinh(a.v), c = std::cosh(a.v);
  return compose(c, s, c, s, a);
}
inline Jet sqrt(const Jet& a) {
  double u = a.v, r = std::sqrt(u);
  return compose(r, 0.5 / r, -0.25 / (r * u), 0.375 / (r * u * u), a);
}
inline Jet pow(const Jet& a, double p) {
  double u = a.v;
  double f0 = std::pow(u, p);
  double f1 = p * std::pow(u, p - 1);
  double f2 = p * (p - 1) * std::pow(u, p - 2);
  double f3 = p * (p - 1) * (p - 2) * std::pow(u, p - 3);
  return compose(f0, f1, f2, f3, a);
}

}  // namespace vglab
