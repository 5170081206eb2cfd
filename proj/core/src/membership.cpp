#include "pflc/fuzzy/membership.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pflc/error.hpp"

namespace pflc::fuzzy {

MembershipFunction::MembershipFunction(std::vector<Breakpoint> breakpoints)
    : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.size() < 2) raise(ErrorCode::ValidationError, "membership needs at least two breakpoints");
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const auto& bp = breakpoints_[i];
    if (!std::isfinite(bp.x)) raise(ErrorCode::ValidationError, "membership breakpoint is not finite");
    if (!(bp.degree >= 0.0 && bp.degree <= 1.0)) {
      std::ostringstream os;
      os << "membership degree " << bp.degree << " at x=" << bp.x << " is outside [0,1]";
      raise(ErrorCode::ValidationError, os.str());
    }
    if (i > 0 && !(breakpoints_[i - 1].x < bp.x)) {
      std::ostringstream os;
      os << "membership breakpoints not strictly increasing at x=" << bp.x;
      raise(ErrorCode::ValidationError, os.str());
    }
  }
}

MembershipFunction MembershipFunction::triangle(double lo, double peak, double hi) {
  return MembershipFunction({{lo, 0.0}, {peak, 1.0}, {hi, 0.0}});
}

MembershipFunction MembershipFunction::trapezoid(double lo, double left_shoulder, double right_shoulder,
                                                 double hi) {
  return MembershipFunction({{lo, 0.0}, {left_shoulder, 1.0}, {right_shoulder, 1.0}, {hi, 0.0}});
}

MembershipFunction MembershipFunction::constant(double lo, double hi, double degree) {
  return MembershipFunction({{lo, degree}, {hi, degree}});
}

double MembershipFunction::operator()(double x) const noexcept {
  if (breakpoints_.empty() || !(x >= lo() && x <= hi())) return 0.0;
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x,
                             [](const Breakpoint& bp, double v) { return bp.x < v; });
  if (it->x == x) return it->degree;
  const Breakpoint& right = *it;
  const Breakpoint& left = *std::prev(it);
  const double w = (x - left.x) / (right.x - left.x);
  const double d = left.degree + (right.degree - left.degree) * w;
  return std::clamp(d, 0.0, 1.0);
}

MembershipFunction MembershipFunction::complement() const {
  std::vector<Breakpoint> out(breakpoints_.begin(), breakpoints_.end());
  for (auto& bp : out) bp.degree = 1.0 - bp.degree;
  return MembershipFunction(std::move(out));
}

FuzzyAttribute::FuzzyAttribute(std::string n, MembershipFunction m)
    : name(std::move(n)), membership(std::move(m)) {
  if (name.empty()) raise(ErrorCode::ValidationError, "fuzzy attribute name is empty");
}

double membership_eval(const FuzzyAttribute& attr, double x) noexcept { return attr.membership(x); }

}  // namespace pflc::fuzzy
