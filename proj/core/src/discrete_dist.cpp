#include "pflc/discrete_dist.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pflc/error.hpp"

namespace pflc {

DiscreteDist::DiscreteDist(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) raise(ErrorCode::ValidationError, "pmf has no atoms");
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });
  double total = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Atom& a = atoms_[i];
    if (!std::isfinite(a.value)) raise(ErrorCode::ValidationError, "pmf value is not finite");
    if (!std::isfinite(a.prob) || a.prob < 0.0) {
      std::ostringstream os;
      os << "pmf mass at " << a.value << " is negative or not finite";
      raise(ErrorCode::ValidationError, os.str());
    }
    if (i > 0 && atoms_[i - 1].value == a.value) {
      std::ostringstream os;
      os << "pmf value " << a.value << " appears twice";
      raise(ErrorCode::ValidationError, os.str());
    }
    total += a.prob;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "pmf masses sum to " << total << ", expected 1";
    raise(ErrorCode::ValidationError, os.str());
  }
}

DiscreteDist DiscreteDist::uniform(std::span<const double> values) {
  std::vector<Atom> atoms;
  atoms.reserve(values.size());
  const double p = values.empty() ? 0.0 : 1.0 / static_cast<double>(values.size());
  for (double v : values) atoms.push_back({v, p});
  return DiscreteDist(std::move(atoms));
}

DiscreteDist DiscreteDist::bernoulli(double p) {
  if (!(p >= 0.0 && p <= 1.0)) raise(ErrorCode::ValidationError, "Bernoulli parameter outside [0,1]");
  return DiscreteDist({{0.0, 1.0 - p}, {1.0, p}});
}

DiscreteDist DiscreteDist::point(double value) { return DiscreteDist({{value, 1.0}}); }

std::vector<double> DiscreteDist::values() const {
  std::vector<double> out;
  out.reserve(atoms_.size());
  for (const Atom& a : atoms_) out.push_back(a.value);
  return out;
}

std::optional<std::size_t> DiscreteDist::index_of(double value) const noexcept {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), value,
                             [](const Atom& a, double v) { return a.value < v; });
  if (it == atoms_.end() || it->value != value) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

std::optional<std::size_t> DiscreteDist::index_near(double value, double tol) const noexcept {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), value,
                             [](const Atom& a, double v) { return a.value < v; });
  std::optional<std::size_t> best;
  double best_gap = tol;
  auto consider = [&](decltype(it) cand) {
    const double gap = std::abs(cand->value - value);
    if (gap <= best_gap) {
      best_gap = gap;
      best = static_cast<std::size_t>(cand - atoms_.begin());
    }
  };
  if (it != atoms_.end()) consider(it);
  if (it != atoms_.begin()) consider(std::prev(it));
  return best;
}

double DiscreteDist::prob_at(double value) const noexcept {
  auto idx = index_of(value);
  return idx ? atoms_[*idx].prob : 0.0;
}

double DiscreteDist::prob_near(double value, double tol) const noexcept {
  auto idx = index_near(value, tol);
  return idx ? atoms_[*idx].prob : 0.0;
}

double DiscreteDist::mean() const noexcept {
  double m = 0.0;
  for (const Atom& a : atoms_) m += a.value * a.prob;
  return m;
}

double DiscreteDist::min_value() const {
  if (atoms_.empty()) raise(ErrorCode::ValidationError, "empty pmf");
  return atoms_.front().value;
}

double DiscreteDist::max_value() const {
  if (atoms_.empty()) raise(ErrorCode::ValidationError, "empty pmf");
  return atoms_.back().value;
}

}  // namespace pflc
