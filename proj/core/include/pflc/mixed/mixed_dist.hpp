#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pflc/discrete_dist.hpp"
#include "pflc/mixed/quadrature.hpp"

namespace pflc::mixed {

/// Non-negative density with a finite support interval. Kinks are interior
/// points where the density is not smooth; quadrature splits there.
struct Density {
  std::function<double(double)> fn;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> kinks;
  std::string label;

  /// fn(x) on [lo, hi], 0 elsewhere.
  double operator()(double x) const { return x < lo || x > hi ? 0.0 : fn(x); }

  static Density uniform(double a, double b);
  /// Truncated where the upper tail mass drops below `tail`, renormalised.
  static Density exponential(double rate, double tail = 1e-12);
  /// Truncated symmetrically so the two tails carry `tail` mass, renormalised.
  static Density normal(double mean, double sd, double tail = 1e-12);

  struct Piece {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> coeffs;  // in powers of (x - lo)
  };
  /// Contiguous pieces; throws ValidationError when a piece is negative at a
  /// sampled point or the pieces overlap or leave gaps.
  static Density piecewise_polynomial(std::vector<Piece> pieces);
};

/// P(x is A) as a function of a real x.
struct SelectionField {
  std::function<double(double)> fn;
  std::vector<double> kinks;
  std::string label;

  /// Throws DomainError when the value leaves [0,1].
  double operator()(double x) const;

  static SelectionField constant(double p);
  static SelectionField identity_on_unit();  // x clamped to [0,1]
};

/// Density plus Dirac atoms, normalised to 1 within 1e-9.
class MixedDist {
 public:
  static constexpr double kMassTolerance = 1e-9;

  MixedDist(std::optional<Density> density, std::vector<Atom> atoms);

  static MixedDist from_density(Density density) { return MixedDist(std::move(density), {}); }
  static MixedDist from_atoms(const DiscreteDist& dist);

  const std::optional<Density>& density() const noexcept { return density_; }
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  double density_mass() const noexcept { return density_mass_; }
  double atom_mass() const noexcept;
  double atom_at(double x) const noexcept;

 private:
  std::optional<Density> density_;
  std::vector<Atom> atoms_;
  double density_mass_ = 0.0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_closed = true;
  bool hi_closed = true;
};

/// Finite union of intervals and isolated points. Overlapping or touching
/// pieces are merged on construction.
class EventSet {
 public:
  EventSet() = default;
  EventSet(std::vector<Interval> intervals, std::vector<double> points);

  static EventSet whole_line();
  static EventSet point(double x) { return EventSet({}, {x}); }
  static EventSet interval(double lo, double hi, bool lo_closed = true, bool hi_closed = true) {
    return EventSet({{lo, hi, lo_closed, hi_closed}}, {});
  }

  bool contains(double x) const noexcept;
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  const std::vector<double>& points() const noexcept { return points_; }
  /// Intervals of [lo, hi] outside the set, ignoring endpoint closedness.
  std::vector<Interval> complement_within(double lo, double hi) const;

 private:
  std::vector<Interval> intervals_;
  std::vector<double> points_;
};

/// Integral of the density over the intervals of the set plus the atom mass
/// inside it.
double prob_event_mixed(const MixedDist& d, const EventSet& event);

/// Right-continuous CDF: atoms count at their own location.
double cdf_mixed(const MixedDist& d, double t);
/// CDF on a sorted grid by accumulating cell integrals; nondecreasing by
/// construction.
std::vector<double> cdf_grid(const MixedDist& d, std::span<const double> ts);

double expect_mixed(const MixedDist& d);

/// Masses of the half-open cells [k h, (k+1) h) at the cell midpoints; atoms
/// keep their own locations. The result is renormalised to total mass 1.
DiscreteDist discretize(const MixedDist& d, double h);

/// Integral of g * density over [lo, hi] with the density's kinks and the
/// extra kinks as breakpoints.
double integrate_density(const Density& f, const std::function<double(double)>& g, double lo, double hi,
                         std::span<const double> extra_kinks = {});

}  // namespace pflc::mixed
