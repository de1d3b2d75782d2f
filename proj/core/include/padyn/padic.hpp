#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "padyn/integer.hpp"

namespace padyn {

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime(std::uint64_t n) noexcept;

/// A verified prime. Construction fails with ErrorCode::kNotPrime otherwise,
/// so everything downstream may assume primality.
class Prime {
 public:
  explicit Prime(std::uint64_t p);

  static Prime from_integer(const Integer& p);

  std::uint64_t value() const noexcept { return p_; }
  Integer as_integer() const { return from_u64(p_); }

  /// p^k as an arbitrary-size integer.
  Integer power(unsigned k) const;

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint64_t p_;
};

/// p-adic valuation: a signed exponent, or infinity for zero.
class Valuation {
 public:
  explicit Valuation(std::int64_t value) : value_(value) {}

  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }

  /// Throws Error(kInvalidArgument) when infinite.
  std::int64_t value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

  /// Infinity compares greater than every finite valuation.
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

 private:
  Valuation() = default;
  std::optional<std::int64_t> value_;
};

Valuation vp_int(const Integer& n, const Prime& p);

/// v_p(numerator / denominator). Throws Error(kZeroDenominator).
Valuation vp_rat(const Integer& numerator, const Integer& denominator, const Prime& p);

/// Exact p-adic absolute value |x|_p = p^(-v), kept as the pair (p, v).
/// The zero norm is represented by an infinite valuation.
class PadicNorm {
 public:
  PadicNorm(Prime p, Valuation v) : p_(p), v_(v) {}

  const Prime& prime() const noexcept { return p_; }
  const Valuation& valuation() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_.is_infinite(); }

  Rational to_rational() const;

  friend bool operator==(const PadicNorm&, const PadicNorm&) = default;

  /// Norms of different primes are incomparable; throws Error(kInvalidArgument).
  friend std::strong_ordering operator<=>(const PadicNorm& a, const PadicNorm& b);

 private:
  Prime p_;
  Valuation v_;
};

PadicNorm abs_p(const Integer& numerator, const Integer& denominator, const Prime& p);
PadicNorm abs_p(const Rational& x, const Prime& p);

/// Truncated p-adic integer: base-p digits a_0 .. a_{k-1}, i.e. a residue
/// in Z/p^kZ. Arithmetic requires both operands to share p and k.
class PadicInt {
 public:
  static PadicInt from_integer(const Integer& n, const Prime& p, unsigned precision);

  /// Digits least significant first; each must lie in [0, p).
  static PadicInt from_digits(std::vector<std::uint64_t> digits, const Prime& p);

  const Prime& prime() const noexcept { return p_; }
  unsigned precision() const noexcept { return static_cast<unsigned>(digits_.size()); }
  std::span<const std::uint64_t> digits() const noexcept { return digits_; }

  /// sum a_i p^i, in [0, p^k).
  Integer residue() const;
  Integer modulus() const { return p_.power(precision()); }

  bool is_unit() const noexcept { return digits_.front() != 0; }

  /// Multiplicative inverse mod p^k. Throws Error(kNotAUnit) when a_0 = 0.
  PadicInt inverse() const;

  friend PadicInt operator+(const PadicInt& x, const PadicInt& y);
  friend PadicInt operator-(const PadicInt& x, const PadicInt& y);
  friend PadicInt operator*(const PadicInt& x, const PadicInt& y);
  friend PadicInt operator-(const PadicInt& x);

  friend bool operator==(const PadicInt&, const PadicInt&) = default;

 private:
  PadicInt(Prime p, std::vector<std::uint64_t> digits) : p_(p), digits_(std::move(digits)) {}

  Prime p_;
  std::vector<std::uint64_t> digits_;
};

inline PadicInt padic_from_int(const Integer& n, const Prime& p, unsigned precision) {
  return PadicInt::from_integer(n, p, precision);
}

/// Which index shift to use when checking compatibility of a residue sequence.
///
/// kStandard: terms (x_1, ..., x_N) with x_{n+1} = x_n (mod p^n), so x_n is a
/// residue mod p^n (the inverse limit of Z/p^nZ).
/// kLiteral:  terms (x_1, ..., x_N) with x_n = x_{n-1} (mod p^n), one power
/// stronger at every step.
enum class CoherenceConvention { kStandard, kLiteral };

struct CoherenceReport {
  bool coherent = true;
  /// 0-based position of the first term that fails its congruence.
  std::optional<std::size_t> first_violation;
};

/// Throws Error(kInvalidArgument) on an empty sequence.
CoherenceReport check_coherent(std::span<const Integer> terms, const Prime& p,
                               CoherenceConvention convention = CoherenceConvention::kStandard);

/// A validated (standard-convention) coherent sequence: an inverse-limit
/// element known to precision N = number of terms.
class CoherentSequence {
 public:
  /// Reduces x_n mod p^n. Throws Error(kInvalidArgument) if not coherent.
  CoherentSequence(std::vector<Integer> terms, const Prime& p);

  const Prime& prime() const noexcept { return p_; }
  std::span<const Integer> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  PadicInt to_padic() const;

 private:
  Prime p_;
  std::vector<Integer> terms_;
};

}  // namespace padyn
