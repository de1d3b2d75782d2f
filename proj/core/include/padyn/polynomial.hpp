#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "padyn/integer.hpp"
#include "padyn/padic.hpp"

namespace padyn {

/// Polynomial in one variable with arbitrary-size integer coefficients,
/// constant term first. Always canonical: no trailing zero coefficients, so
/// the zero polynomial has an empty coefficient list and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<Integer> coeffs) : IntPoly(std::vector<Integer>(coeffs)) {}

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t degree);
  static IntPoly x() { return monomial(1, 1); }

  std::span<const Integer> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  Integer coeff(std::size_t i) const;

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const Integer& leading() const;

  IntPoly pow(unsigned exponent) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(const Integer& c, const IntPoly& a);
  friend IntPoly operator-(const IntPoly& a);

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// Exact value f(x).
Integer eval(const IntPoly& f, const Integer& x);

/// f(x) mod m by Horner's rule with every intermediate reduced mod m.
/// Throws Error(kInvalidArgument) for m < 2.
Integer eval_mod(const IntPoly& f, const Integer& x, const Integer& m);

/// Formal derivative.
IntPoly derivative(const IntPoly& f);

/// Polynomial over F_p with canonical residues in [0, p).
class FpPoly {
 public:
  explicit FpPoly(const Prime& p, std::vector<std::uint64_t> coeffs = {});

  static FpPoly monomial(const Prime& p, std::uint64_t c, std::size_t degree);

  const Prime& prime() const noexcept { return p_; }
  std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }
  std::uint64_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  std::uint64_t leading() const;

  std::uint64_t eval(std::uint64_t x) const noexcept;

  /// Lift to integer coefficients in [0, p).
  IntPoly lift() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);

  friend bool operator==(const FpPoly&, const FpPoly&) = default;

 private:
  void normalize();
  Prime p_;
  std::vector<std::uint64_t> coeffs_;
};

/// Coefficientwise reduction into [0, p).
FpPoly reduce_mod_p(const IntPoly& f, const Prime& p);

struct FpDivMod {
  FpPoly quotient;
  FpPoly remainder;
};

/// f = q*g + r over F_p with deg r < deg g.
/// Throws Error(kDivisionByZero) for g = 0 and Error(kInvalidArgument) when
/// the primes differ.
FpDivMod fp_divmod(const FpPoly& f, const FpPoly& g);

/// x^p - x over F_p.
FpPoly x_pow_p_minus_x(const Prime& p);

/// Remainder of f mod x^p - x over F_p. Same roots in F_p as f, degree < p.
/// The zero polynomial means every residue is a root.
FpPoly fermat_reduce(const FpPoly& f);
FpPoly fermat_reduce(const IntPoly& f, const Prime& p);

struct RootCountCertificate {
  /// True iff f divides x^p - x over F_p, i.e. f has deg f distinct roots.
  bool divides = false;
  /// Quotient of x^p - x by f; monic of degree p - deg f.
  FpPoly quotient;
  /// Remainder of x^p - x by f; zero exactly when divides is true.
  FpPoly remainder;
};

/// Root-count certificate for a polynomial that is monic mod p with degree
/// at most p. Throws Error(kNotMonic) or Error(kInvalidArgument).
RootCountCertificate divides_xp_minus_x(const IntPoly& f, const Prime& p);

/// Scales f by the inverse of its leading coefficient.
/// Throws Error(kDivisionByZero) for the zero polynomial.
FpPoly make_monic(const FpPoly& f);

}  // namespace padyn
