#include "vglab/ode.hpp"

#include <algorithm>
#include <cmath>

namespace vglab {

namespace {

double rk4_step(const std::function<double(double, double)>& rhs, double t, double y, double h) {
  double k1 = rhs(t, y);
  double k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1);
  double k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2);
  double k4 = rhs(t + h, y + h * k3);
  return y + (h / 6.0) * (k1 + 2 * k2 + 2 * k3 + k4);
}

}  // namespace

Profile integrate_ode_scalar(const std::function<double(double, double)>& rhs, double t0,
                             double y0, double t1, const std::vector<double>& knots,
                             const QuadratureSpec& spec) {
  if (t0 == t1) throw DomainError("integrate_ode_scalar: empty interval");
  double dir = (t1 > t0) ? 1.0 : -1.0;
  double span = std::fabs(t1 - t0);

  std::vector<double> stops;
  for (double k : knots)
    if ((k - t0) * dir > 0 && (t1 - k) * dir > 0) stops.push_back(k);
  stops.push_back(t1);
  std::sort(stops.begin(), stops.end(),
            [dir](double a, double b) { return dir > 0 ? a < b : a > b; });
  stops.erase(std::unique(stops.begin(), stops.end()), stops.end());

  std::vector<double> ts, ys, fs;
  double t = t0, y = y0;
  ts.push_back(t);
  ys.push_back(y);
  fs.push_back(rhs(t, y));

  const double h_min = 1e-14 * std::max(span, 1.0);
  const std::size_t max_nodes = 5'000'000;
  std::size_t stop_idx = 0;
  double h = dir * span / 100.0;

  while ((t1 - t) * dir > 0) {
    double next_stop = stops[stop_idx];
    if (std::fabs(h) > std::fabs(next_stop - t)) h = next_stop - t;
    bool accepted = false;
    for (int tries = 0; tries < 60 && !accepted; ++tries) {
      double y_full = rk4_step(rhs, t, y, h);
      double y_half = rk4_step(rhs, t, y, 0.5 * h);
      double y_two = rk4_step(rhs, t + 0.5 * h, y_half, 0.5 * h);
      double err = std::fabs(y_two - y_full) / 15.0;
      double tol = std::max(spec.abs_tol, spec.rel_tol * std::max(std::fabs(y), std::fabs(y_two)));
      double tol_step = tol * std::max(std::fabs(h) / span, 1e-6);
      if (err <= tol_step || std::fabs(h) <= h_min) {
        t += h;
        y = y_two + (y_two - y_full) / 15.0;  // local extrapolation
        ts.push_back(t);
        ys.push_back(y);
        fs.push_back(rhs(t, y));
        accepted = true;
        double grow = (err > 0) ? 0.9 * std::pow(tol_step / err, 0.2) : 5.0;
        h *= std::clamp(grow, 0.2, 5.0);
      } else {
        h *= std::clamp(0.9 * std::pow(tol_step / err, 0.25), 0.1, 0.9);
        if (std::fabs(h) < h_min) h = dir * h_min;
      }
    }
    if (!accepted) throw StepError("integrate_ode_scalar: step size underflow");
    if (ts.size() > max_nodes) throw StepError("integrate_ode_scalar: node budget exhausted");
    if (std::fabs(next_stop - t) <= 1e-15 * std::max(1.0, std::fabs(next_stop))) {
      t = next_stop;
      ts.back() = t;
      if (stop_idx + 1 < stops.size()) ++stop_idx;
    }
  }

  if (dir < 0) {
    std::reverse(ts.begin(), ts.end());
    std::reverse(ys.begin(), ys.end());
    std::reverse(fs.begin(), fs.end());
  }
  std::vector<double> interior;
  for (double k : knots)
    if (k > ts.front() && k < ts.back()) interior.push_back(k);
  return hermite_table_profile(std::move(ts), std::move(ys), std::move(fs), interior);
}

}  // namespace vglab
