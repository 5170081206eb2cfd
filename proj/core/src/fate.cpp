#include "pflc/causal/fate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "pflc/error.hpp"
#include "pflc/random/keyed_stream.hpp"

namespace pflc::causal {
namespace {

constexpr std::uint64_t kStageTag = 0x5354414745ULL;    // "STAGE"
constexpr std::uint64_t kOutcomeTag = 0x4f5554434fULL;  // "OUTCO"

std::string describe(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

constexpr std::array<Level, 3> kStageOrder = {Level::High, Level::Medium, Level::Low};

}  // namespace

std::string_view to_string(Level level) noexcept {
  switch (level) {
    case Level::Low: return "low";
    case Level::Medium: return "medium";
    case Level::High: return "high";
  }
  return "low";
}

Level parse_level(std::string_view name) {
  if (name == "low") return Level::Low;
  if (name == "medium" || name == "med") return Level::Medium;
  if (name == "high") return Level::High;
  raise(ErrorCode::ParseError, "unknown treatment level '" + std::string(name) + "'");
}

TreatmentSpace::TreatmentSpace(DiscreteDist dist, selection::SelectionModel model, fuzzy::FuzzyAttribute low,
                               double t_low, fuzzy::FuzzyAttribute medium, double t_med, fuzzy::FuzzyAttribute high,
                               double t_high, bool require_partition)
    : dist_(std::move(dist)),
      model_(std::move(model)),
      bindings_{selection::AttributeBinding(model_, std::move(low), t_low, dist_),
                selection::AttributeBinding(model_, std::move(medium), t_med, dist_),
                selection::AttributeBinding(model_, std::move(high), t_high, dist_)},
      require_partition_(require_partition) {
  if (!require_partition_) return;
  std::array<std::vector<double>, 3> sel;
  for (int i = 0; i < 3; ++i) sel[i] = selection::select_vector(model_, bindings_[i]);
  const auto atoms = dist_.atoms();
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const double t = atoms[k].value;
    if (t == t_low || t == t_med || t == t_high) continue;
    const double sum = sel[0][k] + sel[1][k] + sel[2][k];
    if (std::abs(sum - 1.0) > kPartitionTolerance)
      raise(ErrorCode::ValidationError, "selection probabilities of the three levels sum to " + describe(sum) +
                                            " at t = " + describe(t));
  }
}

double TreatmentSpace::prob_is(Level level) const { return discrete::prob_omega_is(model_, binding(level)); }

std::vector<Atom> TreatmentSpace::selected_atoms(Level level) const {
  const auto& b = binding(level);
  const auto sel = selection::select_vector(model_, b);
  std::vector<Atom> out;
  const auto atoms = dist_.atoms();
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (atoms[k].value == b.base()) continue;
    out.push_back({atoms[k].value, sel[k] * atoms[k].prob});
  }
  return out;
}

PotentialOutcomeModel::PotentialOutcomeModel(std::map<double, double> p) : p_(std::move(p)) {
  for (const auto& [t, v] : p_) {
    if (!(v >= 0.0 && v <= 1.0))
      raise(ErrorCode::ValidationError, "outcome probability " + describe(v) + " at t = " + describe(t) + " leaves [0,1]");
  }
}

PotentialOutcomeModel PotentialOutcomeModel::from_function(const DiscreteDist& support,
                                                           const std::function<double(double)>& p) {
  std::map<double, double> table;
  for (const Atom& a : support.atoms()) table[a.value] = p(a.value);
  return PotentialOutcomeModel(std::move(table));
}

double PotentialOutcomeModel::at(double t) const {
  auto it = p_.find(t);
  if (it == p_.end()) raise(ErrorCode::ValueNotInSpace, "no outcome probability for t = " + describe(t));
  return it->second;
}

PotentialOutcomeModel PotentialOutcomeModel::complement() const {
  std::map<double, double> q;
  for (const auto& [t, v] : p_) q[t] = 1.0 - v;
  return PotentialOutcomeModel(std::move(q));
}

double expected_Y_of_attr(const TreatmentSpace& space, const PotentialOutcomeModel& po, Level level) {
  double num = 0.0;
  double den = 0.0;
  for (const Atom& a : space.selected_atoms(level)) {
    num += po.at(a.value) * a.prob;
    den += a.prob;
  }
  if (!(den > 0.0))
    raise(ErrorCode::ZeroProbabilityEvent, "P(T is " + std::string(to_string(level)) + ") = 0");
  return num / den;
}

FateReport fate(const TreatmentSpace& space, const PotentialOutcomeModel& po) {
  FateReport r;
  r.e_low = expected_Y_of_attr(space, po, Level::Low);
  r.e_med = expected_Y_of_attr(space, po, Level::Medium);
  r.e_high = expected_Y_of_attr(space, po, Level::High);
  r.fate_lm = r.e_med - r.e_low;
  r.fate_mh = r.e_high - r.e_med;
  r.fate_lh = r.fate_lm + r.fate_mh;
  return r;
}

std::vector<std::size_t> largest_remainder(std::span<const double> weights, std::size_t total) {
  std::vector<std::size_t> counts(weights.size(), 0);
  if (weights.empty()) {
    if (total != 0) raise(ErrorCode::ProportionOverflow, "no cells to place units in");
    return counts;
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) raise(ErrorCode::ValidationError, "weights must be finite and non-negative");
    sum += w;
  }
  if (!(sum > 0.0)) {
    if (total != 0) raise(ErrorCode::ProportionOverflow, "all weights are zero");
    return counts;
  }
  std::vector<double> frac(weights.size());
  std::size_t placed = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double q = static_cast<double>(total) * (weights[i] / sum);
    const double fl = std::floor(q);
    counts[i] = static_cast<std::size_t>(fl);
    frac[i] = q - fl;
    placed += counts[i];
  }
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return frac[a] > frac[b]; });
  for (std::size_t k = 0; placed < total; k = (k + 1) % order.size()) {
    ++counts[order[k]];
    ++placed;
  }
  while (placed > total) {
    // Floating error pushed a floor over; take back from the largest cell.
    auto it = std::max_element(counts.begin(), counts.end());
    --*it;
    --placed;
  }
  return counts;
}

Assignment assign_treatments(const TreatmentSpace& space, std::size_t n_units, std::uint64_t seed) {
  if (!space.require_partition())
    raise(ErrorCode::ValidationError, "sequential assignment needs the three levels to partition each treatment");
  const double total_prob = space.prob_is(Level::Low) + space.prob_is(Level::Medium) + space.prob_is(Level::High);
  if (std::abs(total_prob - 1.0) > TreatmentSpace::kPartitionTolerance)
    raise(ErrorCode::ValidationError, "level proportions sum to " + describe(total_prob));

  Assignment out;
  out.seed = seed;
  out.units.resize(n_units);
  std::vector<std::size_t> pool(n_units);
  std::iota(pool.begin(), pool.end(), 0);

  for (std::size_t stage = 0; stage < kStageOrder.size(); ++stage) {
    const Level level = kStageOrder[stage];
    const auto atoms = space.selected_atoms(level);
    std::size_t demand = pool.size();
    if (level != Level::Low) {
      demand = static_cast<std::size_t>(std::llround(static_cast<double>(n_units) * space.prob_is(level)));
      if (demand > pool.size()) {
        raise(ErrorCode::ProportionOverflow, "stage '" + std::string(to_string(level)) + "' needs " +
                                                 std::to_string(demand) + " units but only " +
                                                 std::to_string(pool.size()) + " remain");
      }
    }
    std::vector<double> weights;
    for (const Atom& a : atoms) weights.push_back(a.prob);
    const auto counts = largest_remainder(weights, demand);

    std::vector<std::pair<std::uint64_t, std::size_t>> keyed;
    keyed.reserve(pool.size());
    for (std::size_t u : pool) keyed.emplace_back(random::KeyedStream::of({seed, kStageTag, stage, u}).next_u64(), u);
    std::sort(keyed.begin(), keyed.end());

    std::size_t next = 0;
    for (std::size_t c = 0; c < counts.size(); ++c) {
      for (std::size_t k = 0; k < counts[c]; ++k, ++next) out.units[keyed[next].second] = {level, atoms[c].value};
    }
    out.level_counts[static_cast<int>(level)] = demand;
    pool.clear();
    for (std::size_t k = next; k < keyed.size(); ++k) pool.push_back(keyed[k].second);
    std::sort(pool.begin(), pool.end());
  }
  return out;
}

std::vector<int> sample_outcomes(const Assignment& assignment, const PotentialOutcomeModel& po, std::uint64_t seed) {
  std::vector<int> y(assignment.units.size());
  for (std::size_t u = 0; u < y.size(); ++u) {
    auto stream = random::KeyedStream::of({seed, kOutcomeTag, u});
    y[u] = stream.bernoulli(po.at(assignment.units[u].t)) ? 1 : 0;
  }
  return y;
}

FateEstimate estimate_fate(const Assignment& assignment, std::span<const int> outcomes) {
  if (outcomes.size() != assignment.units.size())
    raise(ErrorCode::ValidationError, "outcome count differs from the number of units");
  std::array<double, 3> sums{};
  FateEstimate e;
  for (std::size_t u = 0; u < outcomes.size(); ++u) {
    const int g = static_cast<int>(assignment.units[u].level);
    sums[g] += outcomes[u];
    ++e.group_sizes[g];
  }
  std::array<double, 3> var{};
  for (int g = 0; g < 3; ++g) {
    if (e.group_sizes[g] == 0)
      raise(ErrorCode::EmptyGroup, "no unit received level '" + std::string(to_string(static_cast<Level>(g))) + "'");
    const double n = static_cast<double>(e.group_sizes[g]);
    e.group_means[g] = sums[g] / n;
    var[g] = e.group_means[g] * (1.0 - e.group_means[g]) / n;
  }
  constexpr int L = 0, M = 1, H = 2;
  e.est_lm = e.group_means[M] - e.group_means[L];
  e.est_mh = e.group_means[H] - e.group_means[M];
  e.est_lh = e.group_means[H] - e.group_means[L];
  e.se_lm = std::sqrt(var[M] + var[L]);
  e.se_mh = std::sqrt(var[H] + var[M]);
  e.se_lh = std::sqrt(var[H] + var[L]);
  return e;
}

FateReport run_fate_experiment(const TreatmentSpace& space, const PotentialOutcomeModel& po, std::size_t n_units,
                               std::uint64_t seed) {
  FateReport r = fate(space, po);
  const Assignment assignment = assign_treatments(space, n_units, seed);
  const auto y = sample_outcomes(assignment, po, seed);
  r.estimate = estimate_fate(assignment, y);
  r.n_units = n_units;
  r.seed = seed;
  return r;
}

namespace {

std::array<double, 4> ate_groups(std::span<const int> treated, std::span<const int> outcomes) {
  if (treated.size() != outcomes.size()) raise(ErrorCode::ValidationError, "treatment and outcome lengths differ");
  double n1 = 0, n0 = 0, s1 = 0, s0 = 0;
  for (std::size_t i = 0; i < treated.size(); ++i) {
    if (treated[i] != 0) {
      n1 += 1;
      s1 += outcomes[i];
    } else {
      n0 += 1;
      s0 += outcomes[i];
    }
  }
  if (n1 == 0) raise(ErrorCode::EmptyGroup, "treated group is empty");
  if (n0 == 0) raise(ErrorCode::EmptyGroup, "control group is empty");
  return {s1 / n1, s0 / n0, n1, n0};
}

}  // namespace

double classic_ate(std::span<const int> treated, std::span<const int> outcomes) {
  const auto g = ate_groups(treated, outcomes);
  return g[0] - g[1];
}

double classic_ate_se(std::span<const int> treated, std::span<const int> outcomes) {
  const auto g = ate_groups(treated, outcomes);
  return std::sqrt(g[0] * (1.0 - g[0]) / g[2] + g[1] * (1.0 - g[1]) / g[3]);
}

}  // namespace pflc::causal
