#include "pflc/mixed/mixed_dist.hpp"

#include <gsl/gsl_cdf.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "pflc/error.hpp"

namespace pflc::mixed {
namespace {

std::string describe(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

double horner(const std::vector<double>& coeffs, double u) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
  return acc;
}

bool touches(const Interval& a, const Interval& b) {
  // a starts no later than b.
  if (a.hi > b.lo) return true;
  return a.hi == b.lo && (a.hi_closed || b.lo_closed);
}

bool in_interval(const Interval& iv, double x) {
  if (x < iv.lo || x > iv.hi) return false;
  if (x == iv.lo && !iv.lo_closed) return false;
  if (x == iv.hi && !iv.hi_closed) return false;
  return true;
}

}  // namespace

Density Density::uniform(double a, double b) {
  if (!(std::isfinite(a) && std::isfinite(b) && a < b))
    raise(ErrorCode::ValidationError, "uniform density needs finite a < b");
  const double h = 1.0 / (b - a);
  return Density{[h](double) { return h; }, a, b, {}, "uniform(" + describe(a) + "," + describe(b) + ")"};
}

Density Density::exponential(double rate, double tail) {
  if (!(rate > 0.0 && std::isfinite(rate))) raise(ErrorCode::ValidationError, "exponential rate must be positive");
  if (!(tail > 0.0 && tail < 1.0)) raise(ErrorCode::ValidationError, "tail mass must lie in (0,1)");
  const double hi = -std::log(tail) / rate;
  const double scale = rate / (1.0 - tail);
  return Density{[rate, scale](double x) { return scale * std::exp(-rate * x); }, 0.0, hi, {},
                 "exponential(" + describe(rate) + ")"};
}

Density Density::normal(double mean, double sd, double tail) {
  if (!(sd > 0.0 && std::isfinite(sd) && std::isfinite(mean)))
    raise(ErrorCode::ValidationError, "normal density needs finite mean and positive sd");
  if (!(tail > 0.0 && tail < 1.0)) raise(ErrorCode::ValidationError, "tail mass must lie in (0,1)");
  const double z = gsl_cdf_ugaussian_Qinv(tail / 2.0);
  const double scale = 1.0 / (sd * std::sqrt(2.0 * std::numbers::pi) * (1.0 - tail));
  return Density{[mean, sd, scale](double x) {
                   const double u = (x - mean) / sd;
                   return scale * std::exp(-0.5 * u * u);
                 },
                 mean - z * sd, mean + z * sd, {mean}, "normal(" + describe(mean) + "," + describe(sd) + ")"};
}

Density Density::piecewise_polynomial(std::vector<Piece> pieces) {
  if (pieces.empty()) raise(ErrorCode::ValidationError, "piecewise polynomial needs at least one piece");
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  std::vector<double> kinks;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Piece& p = pieces[i];
    if (!(p.lo < p.hi) || !std::isfinite(p.lo) || !std::isfinite(p.hi))
      raise(ErrorCode::ValidationError, "piece bounds must be finite with lo < hi");
    if (p.coeffs.empty()) raise(ErrorCode::ValidationError, "piece without coefficients");
    if (i > 0) {
      if (pieces[i - 1].hi != p.lo) raise(ErrorCode::ValidationError, "pieces must be contiguous");
      kinks.push_back(p.lo);
    }
    constexpr int kSamples = 64;
    for (int s = 0; s <= kSamples; ++s) {
      const double u = (p.hi - p.lo) * s / kSamples;
      if (horner(p.coeffs, u) < 0.0)
        raise(ErrorCode::ValidationError, "piecewise polynomial is negative near " + describe(p.lo + u));
    }
  }
  const double lo = pieces.front().lo;
  const double hi = pieces.back().hi;
  auto fn = [pieces = std::move(pieces)](double x) {
    auto it = std::upper_bound(pieces.begin(), pieces.end(), x, [](double v, const Piece& p) { return v < p.lo; });
    if (it != pieces.begin()) --it;
    return std::max(0.0, horner(it->coeffs, x - it->lo));
  };
  return Density{std::move(fn), lo, hi, std::move(kinks), "piecewise"};
}

double SelectionField::operator()(double x) const {
  const double v = fn(x);
  if (!(v >= 0.0 && v <= 1.0))
    raise(ErrorCode::DomainError, "selection probability " + describe(v) + " at " + describe(x) + " leaves [0,1]");
  return v;
}

SelectionField SelectionField::constant(double p) {
  if (!(p >= 0.0 && p <= 1.0)) raise(ErrorCode::DomainError, "constant selection probability must lie in [0,1]");
  return SelectionField{[p](double) { return p; }, {}, "constant(" + describe(p) + ")"};
}

SelectionField SelectionField::identity_on_unit() {
  return SelectionField{[](double x) { return std::clamp(x, 0.0, 1.0); }, {0.0, 1.0}, "identity"};
}

double integrate_density(const Density& f, const std::function<double(double)>& g, double lo, double hi,
                         std::span<const double> extra_kinks) {
  lo = std::max(lo, f.lo);
  hi = std::min(hi, f.hi);
  if (!(lo < hi)) return 0.0;
  std::vector<double> kinks(f.kinks);
  kinks.insert(kinks.end(), extra_kinks.begin(), extra_kinks.end());
  return integrate([&](double x) { return g(x) * f.fn(x); }, lo, hi, kinks);
}

MixedDist::MixedDist(std::optional<Density> density, std::vector<Atom> atoms)
    : density_(std::move(density)), atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end(), [](const Atom& a, const Atom& b) { return a.value < b.value; });
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!std::isfinite(atoms_[i].value) || !(atoms_[i].prob >= 0.0) || !std::isfinite(atoms_[i].prob))
      raise(ErrorCode::ValidationError, "atoms need finite locations and non-negative masses");
    if (i > 0 && atoms_[i - 1].value == atoms_[i].value)
      raise(ErrorCode::ValidationError, "duplicate atom at " + describe(atoms_[i].value));
  }
  if (density_) {
    if (!density_->fn) raise(ErrorCode::ValidationError, "density without a function");
    if (!(std::isfinite(density_->lo) && std::isfinite(density_->hi) && density_->lo < density_->hi))
      raise(ErrorCode::ValidationError, "density support must be a finite interval with lo < hi");
    density_mass_ = integrate_density(*density_, [](double) { return 1.0; }, density_->lo, density_->hi);
  }
  const double total = density_mass_ + atom_mass();
  if (std::abs(total - 1.0) > kMassTolerance)
    raise(ErrorCode::ValidationError, "total mass " + describe(total) + " differs from 1");
}

MixedDist MixedDist::from_atoms(const DiscreteDist& dist) {
  return MixedDist(std::nullopt, std::vector<Atom>(dist.atoms().begin(), dist.atoms().end()));
}

double MixedDist::atom_mass() const noexcept {
  double total = 0.0;
  for (const Atom& a : atoms_) total += a.prob;
  return total;
}

double MixedDist::atom_at(double x) const noexcept {
  for (const Atom& a : atoms_)
    if (a.value == x) return a.prob;
  return 0.0;
}

EventSet::EventSet(std::vector<Interval> intervals, std::vector<double> points) {
  std::vector<Interval> kept;
  for (Interval iv : intervals) {
    if (std::isnan(iv.lo) || std::isnan(iv.hi)) raise(ErrorCode::ValidationError, "interval bound is NaN");
    if (std::isinf(iv.lo)) iv.lo_closed = false;
    if (std::isinf(iv.hi)) iv.hi_closed = false;
    if (iv.lo > iv.hi) continue;
    if (iv.lo == iv.hi) {
      if (iv.lo_closed && iv.hi_closed) points.push_back(iv.lo);
      continue;
    }
    kept.push_back(iv);
  }
  std::sort(kept.begin(), kept.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.lo_closed && !b.lo_closed;
  });
  for (const Interval& iv : kept) {
    if (!intervals_.empty() && touches(intervals_.back(), iv)) {
      Interval& last = intervals_.back();
      if (iv.hi > last.hi) {
        last.hi = iv.hi;
        last.hi_closed = iv.hi_closed;
      } else if (iv.hi == last.hi) {
        last.hi_closed = last.hi_closed || iv.hi_closed;
      }
    } else {
      intervals_.push_back(iv);
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (double p : points) {
    if (std::isnan(p)) raise(ErrorCode::ValidationError, "event point is NaN");
    bool absorbed = false;
    for (Interval& iv : intervals_) {
      if (in_interval(iv, p)) {
        absorbed = true;
        break;
      }
      if (p == iv.lo) {
        iv.lo_closed = true;
        absorbed = true;
        break;
      }
      if (p == iv.hi) {
        iv.hi_closed = true;
        absorbed = true;
        break;
      }
    }
    if (!absorbed) points_.push_back(p);
  }
  // Closing an endpoint can make neighbours touch.
  std::vector<Interval> merged;
  for (const Interval& iv : intervals_) {
    if (!merged.empty() && touches(merged.back(), iv)) {
      merged.back().hi = iv.hi;
      merged.back().hi_closed = iv.hi_closed;
    } else {
      merged.push_back(iv);
    }
  }
  intervals_ = std::move(merged);
}

EventSet EventSet::whole_line() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return EventSet({{-inf, inf, false, false}}, {});
}

bool EventSet::contains(double x) const noexcept {
  for (const Interval& iv : intervals_)
    if (in_interval(iv, x)) return true;
  return std::binary_search(points_.begin(), points_.end(), x);
}

std::vector<Interval> EventSet::complement_within(double lo, double hi) const {
  std::vector<Interval> out;
  double cursor = lo;
  for (const Interval& iv : intervals_) {
    if (iv.hi <= cursor) continue;
    if (iv.lo >= hi) break;
    if (iv.lo > cursor) out.push_back({cursor, iv.lo, true, true});
    cursor = std::max(cursor, iv.hi);
  }
  if (cursor < hi) out.push_back({cursor, hi, true, true});
  return out;
}

double prob_event_mixed(const MixedDist& d, const EventSet& event) {
  double total = 0.0;
  if (d.density()) {
    for (const Interval& iv : event.intervals())
      total += integrate_density(*d.density(), [](double) { return 1.0; }, iv.lo, iv.hi);
  }
  for (const Atom& a : d.atoms())
    if (event.contains(a.value)) total += a.prob;
  return std::clamp(total, 0.0, 1.0);
}

double cdf_mixed(const MixedDist& d, double t) {
  if (std::isnan(t)) raise(ErrorCode::DomainError, "cdf argument is NaN");
  double total = 0.0;
  if (d.density() && t > d.density()->lo)
    total += integrate_density(*d.density(), [](double) { return 1.0; }, d.density()->lo, t);
  for (const Atom& a : d.atoms())
    if (a.value <= t) total += a.prob;
  return std::clamp(total, 0.0, 1.0);
}

std::vector<double> cdf_grid(const MixedDist& d, std::span<const double> ts) {
  if (!std::is_sorted(ts.begin(), ts.end())) raise(ErrorCode::ValidationError, "cdf grid must be sorted");
  std::vector<double> out;
  out.reserve(ts.size());
  if (ts.empty()) return out;
  double running = cdf_mixed(d, ts[0]);
  out.push_back(running);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    double step = 0.0;
    if (d.density()) step += integrate_density(*d.density(), [](double) { return 1.0; }, ts[i - 1], ts[i]);
    for (const Atom& a : d.atoms())
      if (a.value > ts[i - 1] && a.value <= ts[i]) step += a.prob;
    running = std::min(1.0, running + std::max(0.0, step));
    out.push_back(running);
  }
  return out;
}

double expect_mixed(const MixedDist& d) {
  double total = 0.0;
  if (d.density())
    total += integrate_density(*d.density(), [](double x) { return x; }, d.density()->lo, d.density()->hi);
  for (const Atom& a : d.atoms()) total += a.value * a.prob;
  return total;
}

DiscreteDist discretize(const MixedDist& d, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) raise(ErrorCode::ValidationError, "grid step must be positive");
  std::map<double, double> mass;
  if (d.density()) {
    const Density& f = *d.density();
    const double k0 = std::floor(f.lo / h);
    const double k1 = std::floor(f.hi / h);
    if (k1 - k0 > 1e7) raise(ErrorCode::ValidationError, "grid step too small for the support");
    for (double k = k0; k <= k1; k += 1.0) {
      const double m = integrate_density(f, [](double) { return 1.0; }, k * h, (k + 1.0) * h);
      if (m > 0.0) mass[(k + 0.5) * h] += m;
    }
  }
  for (const Atom& a : d.atoms())
    if (a.prob > 0.0) mass[a.value] += a.prob;
  double total = 0.0;
  for (const auto& [x, m] : mass) total += m;
  if (!(total > 0.0)) raise(ErrorCode::ValidationError, "distribution has no mass to discretize");
  std::vector<Atom> atoms;
  atoms.reserve(mass.size());
  const bool rescale = std::abs(total - 1.0) > 1e-15;
  for (const auto& [x, m] : mass) atoms.push_back({x, rescale ? m / total : m});
  return DiscreteDist(std::move(atoms));
}

}  // namespace pflc::mixed
