#include "vglab/profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace vglab {

namespace {

double domain_slack(double lo, double hi) {
  double scale = std::max({1.0, std::isfinite(lo) ? std::fabs(lo) : 0.0,
                           std::isfinite(hi) ? std::fabs(hi) : 0.0});
  return 1e-12 * scale;
}

}  // namespace

Profile::Profile(double lo, double hi, std::vector<Piece> pieces, int smoothness_order)
    : lo_(lo), hi_(hi), smoothness_(smoothness_order) {
  if (pieces.empty()) throw DomainError("profile: no pieces");
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    if (!(pieces[i].hi == pieces[i + 1].lo))
      throw DomainError("profile: pieces not contiguous");
    knots_.push_back(pieces[i].hi);
  }
  if (pieces.front().lo != lo || pieces.back().hi != hi)
    throw DomainError("profile: pieces do not cover domain");
  pieces_ = std::make_shared<const std::vector<Piece>>(std::move(pieces));
  double mism = max_knot_mismatch();
  if (mism > 1e-9) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "profile: knot mismatch %.3e exceeds 1e-9", mism);
    throw DomainError(buf);
  }
}

Profile Profile::analytic(double lo, double hi, int order, std::function<Jet(double)> fn) {
  std::vector<Piece> ps;
  ps.push_back({lo, hi, order, std::move(fn)});
  return Profile(lo, hi, std::move(ps), 3);
}

std::size_t Profile::piece_index(double t, int side) const {
  const auto& ps = *pieces_;
  double slack = domain_slack(lo_, hi_);
  if (t < lo_ - slack || t > hi_ + slack) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "profile: t=%.17g outside domain [%.17g, %.17g]", t, lo_, hi_);
    throw DomainError(buf);
  }
  t = std::min(std::max(t, lo_), hi_);
  // right-continuous selection by default; side<0 picks the left piece at knots
  std::size_t idx;
  if (side >= 0) {
    auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
    idx = static_cast<std::size_t>(it - knots_.begin());
  } else {
    auto it = std::lower_bound(knots_.begin(), knots_.end(), t);
    idx = static_cast<std::size_t>(it - knots_.begin());
  }
  if (idx >= ps.size()) idx = ps.size() - 1;
  return idx;
}

const Profile::Piece& Profile::piece_containing(double t, int side) const {
  return (*pieces_)[piece_index(t, side)];
}

double Profile::eval(double t, int order) const { return eval_side(t, order, +1); }

double Profile::eval_side(double t, int order, int side) const {
  const Piece& p = piece_containing(t, side);
  if (order > p.order) throw OrderError("profile: derivative order unavailable");
  double tc = std::min(std::max(t, p.lo), p.hi);
  Jet j = p.eval(tc);
  switch (order) {
    case 0: return j.v;
    case 1: return j.d1;
    case 2: return j.d2;
    case 3: return j.d3;
    default: throw OrderError("profile: order must be 0..3");
  }
}

Jet Profile::jet(double t) const {
  const Piece& p = piece_containing(t, +1);
  return p.eval(std::min(std::max(t, p.lo), p.hi));
}

int Profile::min_piece_order() const {
  int o = 3;
  for (const auto& p : *pieces_) o = std::min(o, p.order);
  return o;
}

double Profile::max_knot_mismatch() const {
  const auto& ps = *pieces_;
  double worst = 0;
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    double k = ps[i].hi;
    Jet l = ps[i].eval(k);
    Jet r = ps[i + 1].eval(k);
    int upto = std::min({smoothness_, ps[i].order, ps[i + 1].order});
    const double lv[4] = {l.v, l.d1, l.d2, l.d3};
    const double rv[4] = {r.v, r.d1, r.d2, r.d3};
    for (int o = 0; o <= upto; ++o) {
      double scale = std::max({1.0, std::fabs(lv[o]), std::fabs(rv[o])});
      worst = std::max(worst, std::fabs(lv[o] - rv[o]) / scale);
    }
  }
  return worst;
}

Profile make_even(const Profile& half) {
  if (half.lo() != 0) throw DomainError("make_even: half profile must start at 0");
  auto stable = std::make_shared<Profile>(half);
  double hi = half.hi();
  std::vector<double> bounds;
  bounds.push_back(0);
  for (double k : half.knots()) bounds.push_back(k);
  bounds.push_back(hi);
  int order = half.min_piece_order();
  auto mirrored_eval = [stable](double t) {
    Jet j = stable->jet(-t);
    return Jet{j.v, -j.d1, j.d2, -j.d3};
  };
  auto direct_eval = [stable](double t) { return stable->jet(t); };
  std::vector<Profile::Piece> ps;
  for (std::size_t i = bounds.size(); i-- > 1;)
    ps.push_back({-bounds[i], -bounds[i - 1], order, mirrored_eval});
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
    ps.push_back({bounds[i], bounds[i + 1], order, direct_eval});
  return Profile(-hi, hi, std::move(ps), half.smoothness_order());
}

Profile shift_profile(const Profile& p, double t0) {
  auto stable = std::make_shared<Profile>(p);
  std::vector<double> bounds;
  bounds.push_back(p.lo());
  for (double k : p.knots()) bounds.push_back(k);
  bounds.push_back(p.hi());
  std::vector<Profile::Piece> ps;
  int order = p.min_piece_order();
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    ps.push_back({bounds[i] + t0, bounds[i + 1] + t0, order,
                  [stable, t0](double t) { return stable->jet(t - t0); }});
  }
  return Profile(p.lo() + t0, p.hi() + t0, std::move(ps), p.smoothness_order());
}

Profile stretch_profile(const Profile& p, double c) {
  if (!(c > 0)) throw ParamError("stretch_profile: c must be positive");
  auto stable = std::make_shared<Profile>(p);
  std::vector<double> bounds;
  bounds.push_back(p.lo());
  for (double k : p.knots()) bounds.push_back(k);
  bounds.push_back(p.hi());
  std::vector<Profile::Piece> ps;
  int order = p.min_piece_order();
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    ps.push_back({bounds[i] * c, bounds[i + 1] * c, order, [stable, c](double t) {
                    Jet j = stable->jet(t / c);
                    return Jet{c * j.v, j.d1, j.d2 / c, j.d3 / (c * c)};
                  }});
  }
  return Profile(p.lo() * c, p.hi() * c, std::move(ps), p.smoothness_order());
}

Profile hermite_table_profile(std::vector<double> t, std::vector<double> y,
                              std::vector<double> dydt, std::vector<double> interior_knots,
                              int smoothness_order) {
  if (t.size() < 2 || t.size() != y.size() || t.size() != dydt.size())
    throw DomainError("hermite_table_profile: bad table");
  struct Table {
    std::vector<double> t, y, f;
  };
  auto tab = std::make_shared<Table>(Table{std::move(t), std::move(y), std::move(dydt)});
  auto eval = [tab](double x) {
    const auto& T = tab->t;
    auto it = std::upper_bound(T.begin(), T.end(), x);
    std::size_t i = (it == T.begin()) ? 0 : static_cast<std::size_t>(it - T.begin()) - 1;
    if (i + 1 >= T.size()) i = T.size() - 2;
    double ta = T[i], tb = T[i + 1], h = tb - ta;
    double ya = tab->y[i], yb = tab->y[i + 1], fa = tab->f[i], fb = tab->f[i + 1];
    double s = (x - ta) / h;
    // cubic Hermite basis
    double s2 = s * s, s3 = s2 * s;
    double v = ya * (2 * s3 - 3 * s2 + 1) + yb * (-2 * s3 + 3 * s2) +
               h * fa * (s3 - 2 * s2 + s) + h * fb * (s3 - s2);
    double d1 = (ya * (6 * s2 - 6 * s) + yb * (-6 * s2 + 6 * s)) / h + fa * (3 * s2 - 4 * s + 1) +
                fb * (3 * s2 - 2 * s);
    double d2 = (ya * (12 * s - 6) + yb * (-12 * s + 6)) / (h * h) +
                (fa * (6 * s - 4) + fb * (6 * s - 2)) / h;
    double d3 = (12 * (ya - yb)) / (h * h * h) + 6 * (fa + fb) / (h * h);
    return Jet{v, d1, d2, d3};
  };
  double lo = tab->t.front(), hi = tab->t.back();
  std::vector<double> bounds;
  bounds.push_back(lo);
  for (double k : interior_knots)
    if (k > lo && k < hi) bounds.push_back(k);
  bounds.push_back(hi);
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());
  std::vector<Profile::Piece> ps;
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
    ps.push_back({bounds[i], bounds[i + 1], 2, eval});
  return Profile(lo, hi, std::move(ps), smoothness_order);
}

}  // namespace vglab
