#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pflc/discrete_dist.hpp"
#include "pflc/fuzzy/membership.hpp"
#include "pflc/fuzzy/tnorm.hpp"

namespace pflc::selection {

/// The rule that turns a membership degree into a selection probability
/// P(x is A).
enum class SelectionRule {
  Classic,           // mu(x) / sum over the space of mu
  ClassicProbBased,  // mu(x) * P(X = x)
  SimpleFuzzy,       // mu(x)
  RelativeFuzzy,     // mu_A(x) / (mu_A(x) + sum of sibling memberships at x)
  MembershipScaled,  // P(X = mu(x) * x)
};

enum class ModelKind {
  Classic,
  ClassicProbBased,
  SimpleFuzzy,
  RelativeFuzzy,
  MembershipScaled,
  GeneralizedMembership,      // base rule with mu replaced by mu^r(x, A)
  GeneralizedStandard,        // conditional uses T(r * P(y is B), P(x is A))
  RandomGeneralizedStandard,  // as above with r drawn from a scale pmf
};

/// Per-attribute exponent lookup: r(x) = table value when x is listed,
/// otherwise the constant.
struct ExponentTable {
  double constant = 1.0;
  std::map<double, double> per_element;

  double at(double x) const noexcept;

  friend bool operator==(const ExponentTable&, const ExponentTable&) = default;
};

struct SelectionModel {
  /// Matching tolerance for MembershipScaled lookups of mu(x) * x in the space.
  static constexpr double kScaledMatchTolerance = 1e-9;

  ModelKind kind = ModelKind::SimpleFuzzy;
  /// Selection rule for the three generalized kinds; ignored otherwise.
  SelectionRule base = SelectionRule::SimpleFuzzy;
  fuzzy::TNorm tnorm = fuzzy::TNorm::min();

  /// RelativeFuzzy group. The attribute being evaluated is always part of the
  /// denominator; a group member with the same name is not counted twice.
  std::vector<fuzzy::FuzzyAttribute> siblings;
  /// GeneralizedMembership exponents keyed by attribute name.
  std::map<std::string, ExponentTable, std::less<>> exponents;
  double default_exponent = 1.0;
  /// GeneralizedStandard scale r > 0.
  double scale = 1.0;
  /// RandomGeneralizedStandard scale distribution over positive reals.
  std::optional<DiscreteDist> scale_dist;
  std::uint64_t seed = 0;

  /// Throws ValidationError for missing or out-of-range model parameters.
  void validate() const;

  SelectionRule rule() const noexcept;

  /// Membership degree after the generalized-membership exponent, if any.
  /// A zero degree stays zero for every exponent.
  double effective_degree(const fuzzy::FuzzyAttribute& attr, double x) const;

  friend bool operator==(const SelectionModel&, const SelectionModel&) = default;
};

std::string_view to_string(ModelKind kind) noexcept;
std::string_view to_string(SelectionRule rule) noexcept;
ModelKind parse_model_kind(std::string_view name);
SelectionRule parse_selection_rule(std::string_view name);

/// An attribute tied to its sample space and base element x_A.
///
/// Construction checks that x_A is in the space and that P(x_A is A) = 0
/// under the supplied model, which makes the attribute proper.
class AttributeBinding {
 public:
  AttributeBinding(const SelectionModel& model, fuzzy::FuzzyAttribute attr, double base, DiscreteDist space);

  const fuzzy::FuzzyAttribute& attr() const noexcept { return attr_; }
  const std::string& name() const noexcept { return attr_.name; }
  double base() const noexcept { return base_; }
  const DiscreteDist& space() const noexcept { return space_; }

 private:
  fuzzy::FuzzyAttribute attr_;
  double base_;
  DiscreteDist space_;
};

/// P(x is A) without requiring a binding. Throws ValueNotInSpace when x is
/// not a value of `space`, EmptySupport when a normaliser is zero.
double selection_probability(const SelectionModel& model, const fuzzy::FuzzyAttribute& attr,
                             const DiscreteDist& space, double x);

/// P(x is A) for every value of `space`, in value order.
std::vector<double> selection_vector(const SelectionModel& model, const fuzzy::FuzzyAttribute& attr,
                                     const DiscreteDist& space);

double select_prob(const SelectionModel& model, const AttributeBinding& binding, double x);
std::vector<double> select_vector(const SelectionModel& model, const AttributeBinding& binding);

struct ProperReport {
  bool proper = false;
  std::vector<double> witnesses;  // every x with P(x is A) = 0
};

ProperReport check_proper(const SelectionModel& model, const fuzzy::FuzzyAttribute& attr,
                          const DiscreteDist& space);
ProperReport check_proper(const SelectionModel& model, const AttributeBinding& binding);

/// Smallest x with P(x is A) = 0, or the largest one when `prefer_max`.
/// Throws InvalidBase when the attribute is not proper.
double default_base(const SelectionModel& model, const fuzzy::FuzzyAttribute& attr, const DiscreteDist& space,
                    bool prefer_max);

}  // namespace pflc::selection
