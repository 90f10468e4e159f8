#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "vglab/errors.hpp"
#include "vglab/jet.hpp"

namespace vglab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// A real function of one variable, given as analytic pieces joined at knots.
// Pieces return a full order-3 jet; the declared order bounds which
// derivatives are trustworthy. Immutable after construction.
class Profile {
 public:
  struct Piece {
    double lo = 0, hi = 0;
    int order = 2;
    std::function<Jet(double)> eval;
  };

  Profile() = default;
  Profile(double lo, double hi, std::vector<Piece> pieces, int smoothness_order);

  // Single analytic piece on [lo, hi].
  static Profile analytic(double lo, double hi, int order, std::function<Jet(double)> fn);

  // value / derivative; at a knot the right-hand piece wins
  double eval(double t, int order) const;
  double operator()(double t) const { return eval(t, 0); }
  Jet jet(double t) const;

  // one-sided evaluation, for sampling certificates across knots
  double eval_side(double t, int order, int side) const;  // side < 0 left, else right

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const std::vector<double>& knots() const { return knots_; }
  int smoothness_order() const { return smoothness_; }
  int min_piece_order() const;

  // knot continuity check (run at construction; callable in tests)
  double max_knot_mismatch() const;

  const Piece& piece_containing(double t, int side = +1) const;

 private:
  double lo_ = 0, hi_ = 0;
  int smoothness_ = 1;
  std::vector<double> knots_;  // interior breakpoints, strictly increasing
  std::shared_ptr<const std::vector<Piece>> pieces_;

  std::size_t piece_index(double t, int side) const;
};

// p(|t|) with odd-order sign flips; domain mirrored to [-hi, hi].
Profile make_even(const Profile& half);

// t -> p(t - t0)
Profile shift_profile(const Profile& p, double t0);

// t -> c * p(t / c); derivatives scale accordingly (c > 0)
Profile stretch_profile(const Profile& p, double c);

// Dense table with node slopes; evaluated by monotone cubic Hermite cells.
// interior_knots must be a subset of the node set (cells never straddle them).
Profile hermite_table_profile(std::vector<double> t, std::vector<double> y,
                              std::vector<double> dydt, std::vector<double> interior_knots,
                              int smoothness_order = 1);

}  // namespace vglab
