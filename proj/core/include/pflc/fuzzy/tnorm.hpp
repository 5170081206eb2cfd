#pragma once

#include <span>
#include <string>
#include <string_view>

namespace pflc::fuzzy {

enum class TNormKind {
  Min,
  Product,
  Lukasiewicz,
  Drastic,
  NilpotentMin,
  HamacherProduct,
  AczelAlsina,
  SugenoWeber,
};

/// A t-norm from the fixed catalogue or one of the two parametric families.
///
/// Aczel-Alsina takes p in [0, inf] (p = 0 is the drastic t-norm, p = inf the
/// minimum); Sugeno-Weber takes p in [-1, inf] (p = -1 drastic, p = inf
/// product). Infinity is spelled std::numeric_limits<double>::infinity().
class TNorm {
 public:
  constexpr TNorm() = default;

  static TNorm min() { return TNorm(TNormKind::Min, 0.0); }
  static TNorm product() { return TNorm(TNormKind::Product, 0.0); }
  static TNorm lukasiewicz() { return TNorm(TNormKind::Lukasiewicz, 0.0); }
  static TNorm drastic() { return TNorm(TNormKind::Drastic, 0.0); }
  static TNorm nilpotent_min() { return TNorm(TNormKind::NilpotentMin, 0.0); }
  static TNorm hamacher_product() { return TNorm(TNormKind::HamacherProduct, 0.0); }
  /// Throws DomainError unless p is in [0, inf].
  static TNorm aczel_alsina(double p);
  /// Throws DomainError unless p is in [-1, inf].
  static TNorm sugeno_weber(double p);

  TNormKind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return parameter_; }
  bool is_parametric() const noexcept {
    return kind_ == TNormKind::AczelAlsina || kind_ == TNormKind::SugenoWeber;
  }

  /// T(a, b). Throws DomainError if either argument is outside [0,1].
  double operator()(double a, double b) const;

  /// T(v1, ..., vn); the empty fold is the identity 1.
  double fold(std::span<const double> values) const;

  std::string label() const;

  friend bool operator==(const TNorm&, const TNorm&) = default;

 private:
  constexpr TNorm(TNormKind kind, double p) : kind_(kind), parameter_(p) {}

  TNormKind kind_ = TNormKind::Min;
  double parameter_ = 0.0;
};

double tnorm_eval(const TNorm& t, double a, double b);

struct FuzzyAttribute;

/// Degree of the conjunction "A & B" at x: T(mu_A(x), mu_B(x)).
double tnorm_and_membership(const TNorm& t, const FuzzyAttribute& a1, const FuzzyAttribute& a2, double x);

std::string_view to_string(TNormKind kind) noexcept;
/// Accepts the snake_case names produced by to_string's lowercase form,
/// e.g. "min", "aczel_alsina". Throws ParseError otherwise.
TNormKind parse_tnorm_kind(std::string_view name);

/// Worst deviations from the t-norm axioms on uniform grids of [0,1].
struct TNormAxiomReport {
  double commutativity = 0.0;  // max |T(a,b) - T(b,a)|
  double identity = 0.0;       // max |T(a,1) - a|
  double associativity = 0.0;  // max |T(a,T(b,c)) - T(T(a,b),c)|
  double monotonicity = 0.0;   // max of T(a,b) - T(c,d) over a <= c, b <= d
  double annihilator = 0.0;    // max T(a,0)
};

TNormAxiomReport check_tnorm_axioms(const TNorm& t, std::size_t commutativity_n = 101, std::size_t associativity_n = 21,
                                    std::size_t identity_n = 1001, std::size_t monotonicity_n = 21);

}  // namespace pflc::fuzzy
