#include "pflc/error.hpp"

namespace pflc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::EmptySupport: return "EmptySupport";
    case ErrorCode::ValueNotInSpace: return "ValueNotInSpace";
    case ErrorCode::InvalidBase: return "InvalidBase";
    case ErrorCode::ConditionImpossible: return "ConditionImpossible";
    case ErrorCode::InconsistentJoint: return "InconsistentJoint";
    case ErrorCode::UnresolvedJoint: return "UnresolvedJoint";
    case ErrorCode::ZeroProbabilityEvent: return "ZeroProbabilityEvent";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::ProportionOverflow: return "ProportionOverflow";
    case ErrorCode::EmptyGroup: return "EmptyGroup";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), detail_(message) {}

void raise(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace pflc
