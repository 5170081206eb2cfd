#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pflc/discrete/xi.hpp"
#include "pflc/discrete_dist.hpp"
#include "pflc/selection/model.hpp"

namespace pflc::causal {

enum class Level { Low = 0, Medium = 1, High = 2 };

std::string_view to_string(Level level) noexcept;
Level parse_level(std::string_view name);

/// Treatment variable T with the three fuzzy levels that split it.
class TreatmentSpace {
 public:
  static constexpr double kPartitionTolerance = 1e-9;

  /// Throws InvalidBase for a base element with positive selection
  /// probability, and ValidationError when `require_partition` is set and the
  /// three selection probabilities do not sum to 1 at some non-base t.
  TreatmentSpace(DiscreteDist dist, selection::SelectionModel model, fuzzy::FuzzyAttribute low, double t_low,
                 fuzzy::FuzzyAttribute medium, double t_med, fuzzy::FuzzyAttribute high, double t_high,
                 bool require_partition = true);

  const DiscreteDist& dist() const noexcept { return dist_; }
  const selection::SelectionModel& model() const noexcept { return model_; }
  const selection::AttributeBinding& binding(Level level) const noexcept {
    return bindings_[static_cast<int>(level)];
  }
  bool require_partition() const noexcept { return require_partition_; }

  /// P(T is A) for the level's attribute.
  double prob_is(Level level) const;
  /// P(xi_{T,A} = t) for every t other than the level's base, in value order.
  std::vector<Atom> selected_atoms(Level level) const;

 private:
  DiscreteDist dist_;
  selection::SelectionModel model_;
  std::array<selection::AttributeBinding, 3> bindings_;
  bool require_partition_;
};

/// Success probability p(t) of the Bernoulli outcome Y(t).
class PotentialOutcomeModel {
 public:
  explicit PotentialOutcomeModel(std::map<double, double> p);
  static PotentialOutcomeModel from_function(const DiscreteDist& support, const std::function<double(double)>& p);

  /// Throws ValueNotInSpace for a level without an entry.
  double at(double t) const;
  const std::map<double, double>& table() const noexcept { return p_; }
  /// t -> 1 - p(t).
  PotentialOutcomeModel complement() const;

 private:
  std::map<double, double> p_;
};

/// E(Y(A)) = sum over t != t_A of p(t) P(xi_{T,A} = t), divided by P(T is A).
/// Throws ZeroProbabilityEvent when P(T is A) = 0.
double expected_Y_of_attr(const TreatmentSpace& space, const PotentialOutcomeModel& po, Level level);

struct FateEstimate {
  double est_lh = 0.0, est_lm = 0.0, est_mh = 0.0;
  double se_lh = 0.0, se_lm = 0.0, se_mh = 0.0;
  std::array<double, 3> group_means{};       // indexed by Level
  std::array<std::size_t, 3> group_sizes{};  // indexed by Level
};

struct FateReport {
  double e_low = 0.0, e_med = 0.0, e_high = 0.0;
  double fate_lh = 0.0, fate_lm = 0.0, fate_mh = 0.0;
  std::optional<FateEstimate> estimate;
  std::size_t n_units = 0;
  std::uint64_t seed = 0;
};

/// Estimands only; fate_lh is formed as fate_lm + fate_mh so additivity is
/// exact.
FateReport fate(const TreatmentSpace& space, const PotentialOutcomeModel& po);

struct UnitAssignment {
  Level level = Level::Low;
  double t = 0.0;
};

struct Assignment {
  std::vector<UnitAssignment> units;
  std::array<std::size_t, 3> level_counts{};  // indexed by Level
  std::uint64_t seed = 0;
};

/// Sequential stages high, medium, low. Stage counts are n * P(xi_{T,A} = t)
/// rounded by largest remainder; the high and medium stages take
/// round(n * P(T is A)) units and the low stage takes every remaining unit.
/// Units are drawn without replacement from the untreated pool in the order
/// of a key derived from (seed, stage, unit). Throws ProportionOverflow when a
/// stage needs more units than remain and ValidationError when the space is
/// not flagged as a partition.
Assignment assign_treatments(const TreatmentSpace& space, std::size_t n_units, std::uint64_t seed);

/// Bernoulli(p(t)) outcome per unit, keyed on (seed, unit).
std::vector<int> sample_outcomes(const Assignment& assignment, const PotentialOutcomeModel& po, std::uint64_t seed);

/// Group means of Y per level and their differences. Standard errors use the
/// binomial variance of each group mean. Throws EmptyGroup.
FateEstimate estimate_fate(const Assignment& assignment, std::span<const int> outcomes);

/// Estimands plus a Monte Carlo estimate from n_units simulated units.
FateReport run_fate_experiment(const TreatmentSpace& space, const PotentialOutcomeModel& po, std::size_t n_units,
                               std::uint64_t seed);

/// E(Y | T = 1) - E(Y | T = 0) from 0/1 treatment indicators.
double classic_ate(std::span<const int> treated, std::span<const int> outcomes);
/// Binomial standard error of classic_ate.
double classic_ate_se(std::span<const int> treated, std::span<const int> outcomes);

/// Integer counts summing to `total`, proportional to `weights`, by the
/// largest-remainder rule (ties to the lower index).
std::vector<std::size_t> largest_remainder(std::span<const double> weights, std::size_t total);

}  // namespace pflc::causal
