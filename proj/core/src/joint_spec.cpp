#include "pflc/discrete/joint_spec.hpp"

#include <string>

#include "pflc/error.hpp"

namespace pflc::discrete {

std::optional<double> PairTable::find(double x, double y) const {
  auto it = cells_.find({x, y});
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

namespace {

void check_pair(bool independent, const std::optional<PairTable>& table, const char* name) {
  if (independent && table) {
    raise(ErrorCode::ValidationError, std::string("table '") + name + "' supplied while its independence flag is set");
  }
  if (!table) return;
  for (const auto& [key, v] : table->cells()) {
    if (!(v >= 0.0 && v <= 1.0)) {
      raise(ErrorCode::ValidationError, std::string("table '") + name + "' has an entry outside [0,1]");
    }
  }
}

}  // namespace

void JointSpec::validate() const {
  check_pair(xy_independent, joint_xy, "joint_xy");
  check_pair(sel_a_independent_of_y, sel_a, "sel_a");
  check_pair(sel_b_independent_of_x, sel_b, "sel_b");
  check_pair(standard_conditional, cond_b_given_a, "cond_b_given_a");
  check_pair(false, cond_b_given_not_a, "cond_b_given_not_a");
}

}  // namespace pflc::discrete
