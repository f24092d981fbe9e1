#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace theta3 {

enum class ErrorCode {
  ReducibleModulus,
  DegreeMismatch,
  CtxMismatch,
  ZeroInverse,
  ZeroOrder,
  ZeroLog,
  ZeroInput,
  CtxTooLarge,
  NotCoprime,
  BudgetExceeded,
  LabelModeUnavailable,
  ParseError,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

/// Exception type for every recoverable failure in the library. The code
/// identifies the failing contract; what() carries a human-readable detail.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace theta3
