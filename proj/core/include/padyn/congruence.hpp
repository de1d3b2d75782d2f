#pragma once

#include <cstdint>
#include <vector>

#include "padyn/integer.hpp"
#include "padyn/padic.hpp"
#include "padyn/polynomial.hpp"

namespace padyn {

/// A root a of f(x) = c (mod p), classified by f'(a) mod p.
struct RootModP {
  std::uint64_t residue = 0;
  bool singular = false;
  std::uint64_t derivative_residue = 0;

  friend bool operator==(const RootModP&, const RootModP&) = default;
};

struct RootsModP {
  /// Ascending by residue.
  std::vector<RootModP> roots;
  /// f - c folds to zero modulo (p, x^p - x), so every residue is a root.
  bool degenerate = false;
};

/// Largest prime roots_mod_p will search exhaustively.
inline constexpr std::uint64_t kMaxExhaustivePrime = 100'000'000;

/// All residues a in [0, p) with f(a) = target (mod p). Polynomials of
/// degree >= p are first folded modulo x^p - x; classification always uses
/// the derivative of the original f.
/// Throws Error(kBoundExceeded) when p > kMaxExhaustivePrime.
RootsModP roots_mod_p(const IntPoly& f, const Integer& target, const Prime& p);

inline constexpr std::uint64_t kDefaultOracleBound = 10'000'000;

/// Every x in [0, m) with f(x) = target (mod m), by exhaustive evaluation.
/// Works for any modulus m >= 2, prime or not. Large ranges are split across
/// worker threads; the result is sorted regardless.
/// Throws Error(kInvalidArgument) for m < 2 and Error(kBoundExceeded) for m > bound
/// or m >= 2^64.
std::vector<Integer> solve_congruence_bruteforce(const IntPoly& f, const Integer& target, const Integer& m,
                                                 const Integer& bound = Integer(static_cast<unsigned long>(kDefaultOracleBound)));

}  // namespace padyn
