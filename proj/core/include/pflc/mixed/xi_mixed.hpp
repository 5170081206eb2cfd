#pragma once

#include <optional>

#include "pflc/fuzzy/tnorm.hpp"
#include "pflc/mixed/mixed_dist.hpp"

namespace pflc::mixed {

/// Distribution of xi_{X,A} for a density-only X: density sel * f_X and an
/// atom of mass 1 - integral(sel * f_X) at x_A. Throws InvalidBase when
/// sel(x_A) != 0.
MixedDist xi_mixed(const MixedDist& f_x, const SelectionField& sel, double x_A);

/// x_A + integral of (x - x_A) sel(x) f_X(x).
double expect_xi_mixed(const MixedDist& f_x, const SelectionField& sel, double x_A);

/// P(xi_{X,A} in E) without building the distribution. When x_A is in E the
/// complement form 1 - integral over the rest of the line is used.
double prob_event_xi(const MixedDist& f_x, const SelectionField& sel, double x_A, const EventSet& event);

/// How the selection field behaves given the conditioning event.
struct MixedConditionSpec {
  /// Selection independent of the event given X; `sel` is used as is.
  bool sel_independent_of_event = true;
  /// P(x is A | X = x, E) when the flag above is off.
  std::optional<SelectionField> sel_given_event;
};

/// xi_{X,A} given an event E, from the conditional density of X given E.
/// Throws UnresolvedJoint when the selection is not independent of E and no
/// conditional field is supplied.
MixedDist xi_mixed_conditional(const MixedDist& f_x_given_event, const SelectionField& sel, double x_A,
                               const MixedConditionSpec& spec = {});

/// Density of X given xi_{X,B} = x_B: (1 - sel_B) f_X / (1 - integral(sel_B f_X)).
/// Throws ConditionImpossible when the event has probability 0.
MixedDist density_given_not_selected(const MixedDist& f_x, const SelectionField& sel_b);

/// Pointwise P(x is A | not(x is B)) = (sA - T(sA, sB)) / (1 - sB); 0 where
/// sB = 1.
SelectionField negated_selection_field(const fuzzy::TNorm& t, const SelectionField& sel_a,
                                       const SelectionField& sel_b);

/// xi_{X,A} given xi_{X,B} = x_B under a standard model with t-norm t.
MixedDist xi_given_not_selected(const fuzzy::TNorm& t, const MixedDist& f_x, const SelectionField& sel_a,
                                const SelectionField& sel_b, double x_A);

}  // namespace pflc::mixed
