#pragma once

#include <span>
#include <string>
#include <vector>

namespace pflc::fuzzy {

struct Breakpoint {
  double x = 0.0;
  double degree = 0.0;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Piecewise-linear membership function on the closed interval spanned by its
/// breakpoints. Zero outside that interval.
class MembershipFunction {
 public:
  MembershipFunction() = default;

  /// Throws ValidationError unless x is strictly increasing, every degree is
  /// in [0,1] and there are at least two breakpoints.
  explicit MembershipFunction(std::vector<Breakpoint> breakpoints);

  static MembershipFunction triangle(double lo, double peak, double hi);
  static MembershipFunction trapezoid(double lo, double left_shoulder, double right_shoulder, double hi);
  /// Constant degree on [lo, hi].
  static MembershipFunction constant(double lo, double hi, double degree);

  double operator()(double x) const noexcept;

  double lo() const noexcept { return breakpoints_.front().x; }
  double hi() const noexcept { return breakpoints_.back().x; }
  std::span<const Breakpoint> breakpoints() const noexcept { return breakpoints_; }

  /// Membership of "not A": 1 - degree on the domain, 0 outside it.
  MembershipFunction complement() const;

  friend bool operator==(const MembershipFunction&, const MembershipFunction&) = default;

 private:
  std::vector<Breakpoint> breakpoints_;
};

struct FuzzyAttribute {
  std::string name;
  MembershipFunction membership;

  FuzzyAttribute() = default;
  /// Throws ValidationError on an empty name.
  FuzzyAttribute(std::string name, MembershipFunction membership);

  double degree(double x) const noexcept { return membership(x); }

  friend bool operator==(const FuzzyAttribute&, const FuzzyAttribute&) = default;
};

double membership_eval(const FuzzyAttribute& attr, double x) noexcept;

}  // namespace pflc::fuzzy
