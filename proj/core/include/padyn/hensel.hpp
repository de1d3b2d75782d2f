#pragma once

#include <span>
#include <vector>

#include "padyn/integer.hpp"
#include "padyn/padic.hpp"
#include "padyn/polynomial.hpp"

namespace padyn {

/// One Hensel step: given f(a) = 0 (mod p^level) with f'(a) a unit mod p,
/// returns the unique a + t p^level in [0, p^(level+1)) that is a root mod
/// p^(level+1). The input a is first reduced mod p^level.
///
/// Throws Error(kNotARoot) if f(a) is nonzero mod p^level, Error(kSingularRoot)
/// if f'(a) = 0 mod p, Error(kInvalidArgument) for level 0.
Integer hensel_step(const IntPoly& f, const Integer& a, unsigned level, const Prime& p);

/// A nonsingular root of f(x) = target lifted one power of p at a time.
/// ladder()[j-1] is the root mod p^j; consecutive rungs agree mod the
/// smaller power, so the ladder is a coherent sequence.
class LiftedRoot {
 public:
  LiftedRoot(Prime p, IntPoly polynomial, Integer target, std::vector<Integer> ladder)
      : p_(p), polynomial_(std::move(polynomial)), target_(std::move(target)), ladder_(std::move(ladder)) {}

  const Prime& prime() const noexcept { return p_; }
  const IntPoly& polynomial() const noexcept { return polynomial_; }
  const Integer& target() const noexcept { return target_; }
  std::span<const Integer> ladder() const noexcept { return ladder_; }
  unsigned precision() const noexcept { return static_cast<unsigned>(ladder_.size()); }

  /// Root mod p^precision.
  const Integer& value() const { return ladder_.back(); }

  PadicInt as_padic() const { return PadicInt::from_integer(value(), p_, precision()); }
  CoherentSequence as_sequence() const { return CoherentSequence(ladder_, p_); }

 private:
  Prime p_;
  IntPoly polynomial_;
  Integer target_;
  std::vector<Integer> ladder_;
};

/// Lifts a simple root a0 of f(x) = target (mod p) to precision p^k.
/// Monicity is not required. Throws Error(kNotARoot), Error(kSingularRoot) or
/// Error(kInvalidArgument) for k = 0.
LiftedRoot hensel_lift(const IntPoly& f, const Integer& a0, unsigned precision, const Prime& p,
                       const Integer& target = Integer(0));

}  // namespace padyn
