#pragma once

#include <string>
#include <string_view>

#include "padyn/polynomial.hpp"

namespace padyn {

inline constexpr unsigned kMaxExponent = 10'000;
inline constexpr int kMaxParsedDegree = 10'000;

/// Parses a polynomial in x and expands it to canonical coefficients.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' unary) | power)*      juxtaposition: 7x, 2(x+1)
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' digits)?
///   primary := digits | 'x' | '(' expr ')'
///
/// '^' binds tighter than multiplication, which binds tighter than '+'/'-';
/// so -x^2 is -(x^2). Whitespace is ignored. Throws ParseError with a byte
/// offset on malformed input, or when an exponent or the resulting degree
/// exceeds 10^4.
IntPoly parse_poly(std::string_view text);

/// Inverse of parse_poly: "x^2 - 7x + 2", "-x^3 + 1", "0".
std::string print_poly(const IntPoly& f);

}  // namespace padyn
