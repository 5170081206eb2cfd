#include <cmath>
#include <sstream>

#include "pflc/error.hpp"
#include "pflc/selection/model.hpp"

namespace pflc::selection {
namespace {

std::string describe(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

double normaliser_classic(const SelectionModel& model, const fuzzy::FuzzyAttribute& attr,
                          const DiscreteDist& space) {
  double total = 0.0;
  for (const Atom& a : space.atoms()) total += model.effective_degree(attr, a.value);
  if (!(total > 0.0)) raise(ErrorCode::EmptySupport, "attribute '" + attr.name + "' has zero cardinality");
  return total;
}

double relative_probability(const SelectionModel& model, const fuzzy::FuzzyAttribute& attr, double x) {
  const double own = model.effective_degree(attr, x);
  double total = own;
  for (const auto& sib : model.siblings) {
    if (sib.name == attr.name) continue;
    total += model.effective_degree(sib, x);
  }
  if (!(total > 0.0)) {
    raise(ErrorCode::EmptySupport,
          "all relative-fuzzy memberships vanish at x=" + describe(x) + " for '" + attr.name + "'");
  }
  return own / total;
}

double rule_probability(const SelectionModel& model, const fuzzy::FuzzyAttribute& attr,
                        const DiscreteDist& space, double x, double classic_norm) {
  switch (model.rule()) {
    case SelectionRule::Classic:
      return model.effective_degree(attr, x) / classic_norm;
    case SelectionRule::ClassicProbBased:
      return model.effective_degree(attr, x) * space.prob_at(x);
    case SelectionRule::SimpleFuzzy:
      return model.effective_degree(attr, x);
    case SelectionRule::RelativeFuzzy:
      return relative_probability(model, attr, x);
    case SelectionRule::MembershipScaled:
      return space.prob_near(model.effective_degree(attr, x) * x, SelectionModel::kScaledMatchTolerance);
  }
  return 0.0;
}

}  // namespace

double ExponentTable::at(double x) const noexcept {
  auto it = per_element.find(x);
  return it == per_element.end() ? constant : it->second;
}

void SelectionModel::validate() const {
  switch (kind) {
    case ModelKind::RelativeFuzzy:
      if (siblings.empty()) raise(ErrorCode::ValidationError, "relative fuzzy model needs sibling attributes");
      break;
    case ModelKind::GeneralizedMembership: {
      auto check = [](double r, const std::string& where) {
        if (!(r >= 0.0) || !std::isfinite(r))
          raise(ErrorCode::ValidationError, "membership exponent must be a finite non-negative number (" + where + ")");
      };
      check(default_exponent, "default");
      for (const auto& [name, table] : exponents) {
        check(table.constant, name);
        for (const auto& [x, r] : table.per_element) check(r, name + " at " + describe(x));
      }
      break;
    }
    case ModelKind::GeneralizedStandard:
      if (!(scale > 0.0) || !std::isfinite(scale))
        raise(ErrorCode::ValidationError, "generalized standard scale r must be positive");
      break;
    case ModelKind::RandomGeneralizedStandard:
      if (!scale_dist) raise(ErrorCode::ValidationError, "random generalized standard model needs a scale pmf");
      for (const Atom& a : scale_dist->atoms()) {
        if (a.prob > 0.0 && !(a.value > 0.0))
          raise(ErrorCode::ValidationError, "scale pmf must be supported on positive reals");
      }
      break;
    default:
      break;
  }
  if (rule() == SelectionRule::RelativeFuzzy && siblings.empty())
    raise(ErrorCode::ValidationError, "relative fuzzy rule needs sibling attributes");
}

SelectionRule SelectionModel::rule() const noexcept {
  switch (kind) {
    case ModelKind::Classic: return SelectionRule::Classic;
    case ModelKind::ClassicProbBased: return SelectionRule::ClassicProbBased;
    case ModelKind::SimpleFuzzy: return SelectionRule::SimpleFuzzy;
    case ModelKind::RelativeFuzzy: return SelectionRule::RelativeFuzzy;
    case ModelKind::MembershipScaled: return SelectionRule::MembershipScaled;
    default: return base;
  }
}

double SelectionModel::effective_degree(const fuzzy::FuzzyAttribute& attr, double x) const {
  const double mu = attr.degree(x);
  if (kind != ModelKind::GeneralizedMembership || mu == 0.0) return mu;
  auto it = exponents.find(attr.name);
  const double r = it == exponents.end() ? default_exponent : it->second.at(x);
  return std::pow(mu, r);
}

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::Classic: return "classic";
    case ModelKind::ClassicProbBased: return "classic_prob_based";
    case ModelKind::SimpleFuzzy: return "simple_fuzzy";
    case ModelKind::RelativeFuzzy: return "relative_fuzzy";
    case ModelKind::MembershipScaled: return "membership_scaled";
    case ModelKind::GeneralizedMembership: return "generalized_membership";
    case ModelKind::GeneralizedStandard: return "generalized_standard";
    case ModelKind::RandomGeneralizedStandard: return "random_generalized_standard";
  }
  return "unknown";
}

std::string_view to_string(SelectionRule rule) noexcept {
  switch (rule) {
    case SelectionRule::Classic: return "classic";
    case SelectionRule::ClassicProbBased: return "classic_prob_based";
    case SelectionRule::SimpleFuzzy: return "simple_fuzzy";
    case SelectionRule::RelativeFuzzy: return "relative_fuzzy";
    case SelectionRule::MembershipScaled: return "membership_scaled";
  }
  return "unknown";
}

ModelKind parse_model_kind(std::string_view name) {
  for (auto k : {ModelKind::Classic, ModelKind::ClassicProbBased, ModelKind::SimpleFuzzy, ModelKind::RelativeFuzzy,
                 ModelKind::MembershipScaled, ModelKind::GeneralizedMembership, ModelKind::GeneralizedStandard,
                 ModelKind::RandomGeneralizedStandard}) {
    if (to_string(k) == name) return k;
  }
  raise(ErrorCode::ParseError, "unknown selection model '" + std::string(name) + "'");
}

SelectionRule parse_selection_rule(std::string_view name) {
  for (auto r : {SelectionRule::Classic, SelectionRule::ClassicProbBased, SelectionRule::SimpleFuzzy,
                 SelectionRule::RelativeFuzzy, SelectionRule::MembershipScaled}) {
    if (to_string(r) == name) return r;
  }
  raise(ErrorCode::ParseError, "unknown selection rule '" + std::string(name) + "'");
}

AttributeBinding::AttributeBinding(const SelectionModel& model, fuzzy::FuzzyAttribute attr, double base,
                                   DiscreteDist space)
    : attr_(std::move(attr)), base_(base), space_(std::move(space)) {
  if (!space_.contains(base_)) {
    raise(ErrorCode::ValueNotInSpace,
          "base element " + describe(base_) + " of '" + attr_.name + "' is not in its space");
  }
  const double p = selection_probability(model, attr_, space_, base_);
  if (p != 0.0) {
    raise(ErrorCode::InvalidBase, "attribute '" + attr_.name + "' is not proper at base element " +
                                      describe(base_) + ": P(x_A is A) = " + describe(p));
  }
}

double selection_probability(const SelectionModel& model, const fuzzy::FuzzyAttribute& attr,
                             const DiscreteDist& space, double x) {
  if (!space.contains(x)) {
    raise(ErrorCode::ValueNotInSpace, describe(x) + " is not a value of the space of '" + attr.name + "'");
  }
  const double norm = model.rule() == SelectionRule::Classic ? normaliser_classic(model, attr, space) : 1.0;
  return rule_probability(model, attr, space, x, norm);
}

std::vector<double> selection_vector(const SelectionModel& model, const fuzzy::FuzzyAttribute& attr,
                                     const DiscreteDist& space) {
  const double norm = model.rule() == SelectionRule::Classic ? normaliser_classic(model, attr, space) : 1.0;
  std::vector<double> out;
  out.reserve(space.size());
  for (const Atom& a : space.atoms()) out.push_back(rule_probability(model, attr, space, a.value, norm));
  return out;
}

double select_prob(const SelectionModel& model, const AttributeBinding& binding, double x) {
  return selection_probability(model, binding.attr(), binding.space(), x);
}

std::vector<double> select_vector(const SelectionModel& model, const AttributeBinding& binding) {
  return selection_vector(model, binding.attr(), binding.space());
}

ProperReport check_proper(const SelectionModel& model, const fuzzy::FuzzyAttribute& attr,
                          const DiscreteDist& space) {
  ProperReport report;
  const auto probs = selection_vector(model, attr, space);
  const auto atoms = space.atoms();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] == 0.0) report.witnesses.push_back(atoms[i].value);
  }
  report.proper = !report.witnesses.empty();
  return report;
}

ProperReport check_proper(const SelectionModel& model, const AttributeBinding& binding) {
  return check_proper(model, binding.attr(), binding.space());
}

double default_base(const SelectionModel& model, const fuzzy::FuzzyAttribute& attr, const DiscreteDist& space,
                    bool prefer_max) {
  const auto report = check_proper(model, attr, space);
  if (!report.proper) raise(ErrorCode::InvalidBase, "attribute '" + attr.name + "' has no zero-probability element");
  return prefer_max ? report.witnesses.back() : report.witnesses.front();
}

}  // namespace pflc::selection
