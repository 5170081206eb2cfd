#include "pflc/mixed/xi_mixed.hpp"

#include <algorithm>
#include <sstream>

#include "pflc/error.hpp"

namespace pflc::mixed {
namespace {

const Density& density_only(const MixedDist& f_x) {
  if (!f_x.density() || !f_x.atoms().empty())
    raise(ErrorCode::ValidationError, "X must have a density and no atoms");
  return *f_x.density();
}

void check_base(const SelectionField& sel, double x_A) {
  const double v = sel(x_A);
  if (v != 0.0) {
    std::ostringstream os;
    os.precision(17);
    os << "selection probability at the base element " << x_A << " is " << v << ", not 0";
    raise(ErrorCode::InvalidBase, os.str());
  }
}

std::vector<double> merged_kinks(const Density& f, const SelectionField& sel) {
  std::vector<double> k(f.kinks);
  for (double x : sel.kinks)
    if (x > f.lo && x < f.hi) k.push_back(x);
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());
  return k;
}

}  // namespace

MixedDist xi_mixed(const MixedDist& f_x, const SelectionField& sel, double x_A) {
  const Density& f = density_only(f_x);
  check_base(sel, x_A);
  Density g{[fn = f.fn, sel](double x) { return sel(x) * fn(x); }, f.lo, f.hi, merged_kinks(f, sel),
            "sel*" + f.label};
  const double selected = integrate_density(f, [&](double x) { return sel(x); }, f.lo, f.hi, sel.kinks);
  const double alpha = std::clamp(1.0 - selected, 0.0, 1.0);
  return MixedDist(std::move(g), {{x_A, alpha}});
}

double expect_xi_mixed(const MixedDist& f_x, const SelectionField& sel, double x_A) {
  const Density& f = density_only(f_x);
  check_base(sel, x_A);
  return x_A + integrate_density(f, [&](double x) { return (x - x_A) * sel(x); }, f.lo, f.hi, sel.kinks);
}

double prob_event_xi(const MixedDist& f_x, const SelectionField& sel, double x_A, const EventSet& event) {
  const Density& f = density_only(f_x);
  check_base(sel, x_A);
  auto selected_over = [&](const std::vector<Interval>& pieces) {
    double total = 0.0;
    for (const Interval& iv : pieces)
      total += integrate_density(f, [&](double x) { return sel(x); }, iv.lo, iv.hi, sel.kinks);
    return total;
  };
  if (event.contains(x_A)) return std::clamp(1.0 - selected_over(event.complement_within(f.lo, f.hi)), 0.0, 1.0);
  return std::clamp(selected_over(event.intervals()), 0.0, 1.0);
}

MixedDist xi_mixed_conditional(const MixedDist& f_x_given_event, const SelectionField& sel, double x_A,
                               const MixedConditionSpec& spec) {
  if (spec.sel_independent_of_event) {
    if (spec.sel_given_event)
      raise(ErrorCode::ValidationError, "conditional selection field supplied while independence is assumed");
    return xi_mixed(f_x_given_event, sel, x_A);
  }
  if (!spec.sel_given_event)
    raise(ErrorCode::UnresolvedJoint, "selection depends on the event but no conditional field is supplied");
  return xi_mixed(f_x_given_event, *spec.sel_given_event, x_A);
}

MixedDist density_given_not_selected(const MixedDist& f_x, const SelectionField& sel_b) {
  const Density& f = density_only(f_x);
  const double alpha_b =
      1.0 - integrate_density(f, [&](double x) { return sel_b(x); }, f.lo, f.hi, sel_b.kinks);
  if (!(alpha_b > 0.0)) raise(ErrorCode::ConditionImpossible, "P(xi_{X,B} = x_B) = 0");
  Density g{[fn = f.fn, sel_b, alpha_b](double x) { return (1.0 - sel_b(x)) * fn(x) / alpha_b; }, f.lo, f.hi,
            merged_kinks(f, sel_b), f.label + "|not B"};
  return MixedDist::from_density(std::move(g));
}

SelectionField negated_selection_field(const fuzzy::TNorm& t, const SelectionField& sel_a,
                                       const SelectionField& sel_b) {
  std::vector<double> kinks(sel_a.kinks);
  kinks.insert(kinks.end(), sel_b.kinks.begin(), sel_b.kinks.end());
  std::sort(kinks.begin(), kinks.end());
  kinks.erase(std::unique(kinks.begin(), kinks.end()), kinks.end());
  auto fn = [t, sel_a, sel_b](double x) {
    const double sa = sel_a(x);
    const double sb = sel_b(x);
    if (sb >= 1.0) return 0.0;
    return std::clamp((sa - t(sa, sb)) / (1.0 - sb), 0.0, 1.0);
  };
  return SelectionField{std::move(fn), std::move(kinks), sel_a.label + "|not " + sel_b.label};
}

MixedDist xi_given_not_selected(const fuzzy::TNorm& t, const MixedDist& f_x, const SelectionField& sel_a,
                                const SelectionField& sel_b, double x_A) {
  MixedConditionSpec spec;
  spec.sel_independent_of_event = false;
  spec.sel_given_event = negated_selection_field(t, sel_a, sel_b);
  return xi_mixed_conditional(density_given_not_selected(f_x, sel_b), sel_a, x_A, spec);
}

}  // namespace pflc::mixed
