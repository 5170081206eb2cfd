#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pflc {

enum class ErrorCode {
  DomainError,
  EmptySupport,
  ValueNotInSpace,
  InvalidBase,
  ConditionImpossible,
  InconsistentJoint,
  UnresolvedJoint,
  ZeroProbabilityEvent,
  QuadratureFailure,
  ProportionOverflow,
  EmptyGroup,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Parse and validation failures are input problems; everything else is raised
// by an engine while evaluating well-formed input.
constexpr bool is_validation(ErrorCode code) noexcept {
  return code == ErrorCode::ParseError || code == ErrorCode::ValidationError;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  /// The message without the leading kind.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace pflc
