#include "padyn/hensel.hpp"

#include <string>

#include "padyn/error.hpp"

namespace padyn {

Integer hensel_step(const IntPoly& f, const Integer& a, unsigned level, const Prime& p) {
  if (level == 0) throw Error(ErrorCode::kInvalidArgument, "Hensel level must be at least 1");
  const Integer pj = p.power(level);
  const Integer pj1 = pj * p.as_integer();
  const Integer base = mod(a, pj);

  const Integer value = eval_mod(f, base, pj1);
  if (mod(value, pj) != 0) {
    throw Error(ErrorCode::kNotARoot,
                "not a root at level " + std::to_string(level) + ": f(" + to_string(base) + ") != 0 mod p^" +
                    std::to_string(level));
  }
  const Integer slope = eval_mod(derivative(f), base, p.as_integer());
  if (slope == 0) {
    throw Error(ErrorCode::kSingularRoot,
                "singular root - no unique lift: f'(" + to_string(base) + ") = 0 mod " + std::to_string(p.value()));
  }

  // f(a + t p^j) = f(a) + t p^j f'(a) (mod p^(j+1)), so t f'(a) = -f(a)/p^j (mod p).
  Integer quotient;
  mpz_divexact(quotient.get_mpz_t(), value.get_mpz_t(), pj.get_mpz_t());
  const Integer t = mod(-quotient * *inverse_mod(slope, p.as_integer()), p.as_integer());
  return base + t * pj;
}

LiftedRoot hensel_lift(const IntPoly& f, const Integer& a0, unsigned precision, const Prime& p,
                       const Integer& target) {
  if (precision == 0) throw Error(ErrorCode::kInvalidArgument, "precision must be at least 1");
  const IntPoly g = f - IntPoly::constant(target);
  const Integer seed = mod(a0, p.as_integer());

  if (eval_mod(g, seed, p.as_integer()) != 0) {
    throw Error(ErrorCode::kNotARoot, "seed " + to_string(a0) + " is not a root mod " + std::to_string(p.value()));
  }
  if (eval_mod(derivative(g), seed, p.as_integer()) == 0) {
    throw Error(ErrorCode::kSingularRoot,
                "seed " + to_string(a0) + " is a singular root mod " + std::to_string(p.value()) + "; no unique lift");
  }

  std::vector<Integer> ladder;
  ladder.reserve(precision);
  ladder.push_back(seed);
  for (unsigned level = 1; level < precision; ++level) ladder.push_back(hensel_step(g, ladder.back(), level, p));
  return LiftedRoot(p, f, target, std::move(ladder));
}

}  // namespace padyn
