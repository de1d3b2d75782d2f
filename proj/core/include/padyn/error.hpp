#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace padyn {

enum class ErrorCode {
  kInvalidArgument,
  kNotPrime,
  kZeroDenominator,
  kPrecisionMismatch,
  kNotAUnit,
  kDivisionByZero,
  kNotMonic,
  kNotARoot,
  kSingularRoot,
  kBoundExceeded,
  kBudgetExhausted,
  kLengthMismatch,
  kParse,
};

/// Stable snake_case name, used in machine-readable error output.
std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every padyn operation. The code distinguishes
/// precondition failures that callers are expected to handle differently
/// (a non-root seed versus a singular one, say).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in a polynomial expression; position is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::kParse, message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace padyn
