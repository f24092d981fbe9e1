#include "theta3/error.hpp"

namespace theta3 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::CtxMismatch: return "CtxMismatch";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::ZeroOrder: return "ZeroOrder";
    case ErrorCode::ZeroLog: return "ZeroLog";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::CtxTooLarge: return "CtxTooLarge";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::LabelModeUnavailable: return "LabelModeUnavailable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace theta3
