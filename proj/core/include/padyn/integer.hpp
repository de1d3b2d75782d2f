#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace padyn {

using Integer = mpz_class;
using Rational = mpq_class;

/// Least nonnegative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

Integer pow(const Integer& base, unsigned long exponent);

/// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<Integer> inverse_mod(const Integer& a, const Integer& m);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// Parses an optionally signed decimal literal. Throws Error(kInvalidArgument).
Integer parse_integer(std::string_view text);

bool fits_u64(const Integer& n);
std::uint64_t to_u64(const Integer& n);
Integer from_u64(std::uint64_t n);

// Word-sized modular helpers; all inputs must already be reduced mod m.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

/// Reduces an arbitrary integer into [0, m) for a word-sized modulus.
std::uint64_t reduce_u64(const Integer& a, std::uint64_t m);

}  // namespace padyn
