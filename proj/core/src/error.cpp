#include "padyn/error.hpp"

namespace padyn {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kNotPrime: return "not_prime";
    case ErrorCode::kZeroDenominator: return "zero_denominator";
    case ErrorCode::kPrecisionMismatch: return "precision_mismatch";
    case ErrorCode::kNotAUnit: return "not_a_unit";
    case ErrorCode::kDivisionByZero: return "division_by_zero";
    case ErrorCode::kNotMonic: return "not_monic";
    case ErrorCode::kNotARoot: return "not_a_root";
    case ErrorCode::kSingularRoot: return "singular_root";
    case ErrorCode::kBoundExceeded: return "bound_exceeded";
    case ErrorCode::kBudgetExhausted: return "budget_exhausted";
    case ErrorCode::kLengthMismatch: return "length_mismatch";
    case ErrorCode::kParse: return "parse_error";
  }
  return "unknown";
}

}  // namespace padyn
