#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "padyn/congruence.hpp"
#include "padyn/error.hpp"

using namespace padyn;

namespace {

std::vector<Integer> residues(const RootsModP& r) {
  std::vector<Integer> out;
  for (const auto& root : r.roots) out.push_back(from_u64(root.residue));
  return out;
}

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected padyn::Error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("roots_mod_p examples") {
  SUBCASE("x^2 = 2 mod 7") {
    const auto r = roots_mod_p(IntPoly::monomial(1, 2), 2, Prime(7));
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == RootModP{3, false, 6});
    CHECK(r.roots[1] == RootModP{4, false, 1});
    CHECK_FALSE(r.degenerate);
  }
  SUBCASE("x^3 - x + 1 has no roots mod 3") {
    CHECK(roots_mod_p(IntPoly{1, -1, 0, 1}, 0, Prime(3)).roots.empty());
  }
  SUBCASE("x^2 = 0 mod 5 is a single singular root") {
    const auto r = roots_mod_p(IntPoly::monomial(1, 2), 0, Prime(5));
    REQUIRE(r.roots.size() == 1);
    CHECK(r.roots[0] == RootModP{0, true, 0});
  }
}

TEST_CASE("classification uses the original derivative, not the folded one") {
  // x^3 folds to x mod 3, whose derivative is 1; the real derivative 3x^2 vanishes.
  const auto r = roots_mod_p(IntPoly::monomial(1, 3), 0, Prime(3));
  REQUIRE(r.roots.size() == 1);
  CHECK(r.roots[0].residue == 0);
  CHECK(r.roots[0].singular);
}

TEST_CASE("degenerate congruences return every residue") {
  // 7x^2 + 3 = 3 (mod 7) for all x.
  const auto r = roots_mod_p(IntPoly{3, 0, 7}, 3, Prime(7));
  CHECK(r.degenerate);
  CHECK(r.roots.size() == 7);
  for (const auto& root : r.roots) CHECK(root.singular);

  // x^5 - x vanishes on F_5 without being the zero polynomial.
  const auto fermat = roots_mod_p(IntPoly{0, -1, 0, 0, 0, 1}, 0, Prime(5));
  CHECK(fermat.degenerate);
  CHECK(fermat.roots.size() == 5);
}

TEST_CASE("solve_congruence_bruteforce") {
  CHECK(solve_congruence_bruteforce(IntPoly{2, -7, 1}, 0, 10) == std::vector<Integer>{3, 4, 8, 9});
  CHECK(solve_congruence_bruteforce(IntPoly{1, 0, 1}, 0, 5) == std::vector<Integer>{2, 3});
  CHECK(solve_congruence_bruteforce(IntPoly::x(), 0, 12) == std::vector<Integer>{0});
  CHECK(code_of([] { solve_congruence_bruteforce(IntPoly::x(), 0, 1); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { solve_congruence_bruteforce(IntPoly::x(), 0, 100, 99); }) == ErrorCode::kBoundExceeded);
  CHECK(code_of([] { solve_congruence_bruteforce(IntPoly::x(), 0, Integer(10'000'001)); }) ==
        ErrorCode::kBoundExceeded);
  CHECK(code_of([] { solve_congruence_bruteforce(IntPoly::x(), 0, pow(Integer(2), 70), pow(Integer(2), 80)); }) ==
        ErrorCode::kBoundExceeded);

  SUBCASE("composite moduli can exceed the degree bound") {
    const auto sols = solve_congruence_bruteforce(IntPoly{2, -7, 1}, 0, 10);
    CHECK(sols.size() > 2);
  }

  SUBCASE("threaded scan matches enumeration on a large modulus") {
    const IntPoly f{3, 0, 5, 1};
    const Integer m = 300'007;
    const auto fast = solve_congruence_bruteforce(f, 11, m);
    CHECK(fast == testing::enumerate_roots(f, 11, m));
    CHECK(std::is_sorted(fast.begin(), fast.end()));
  }
}

TEST_CASE("roots_mod_p agrees with brute force on random instances") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const Prime p(testing::pick(rng, {2, 3, 5, 7, 11, 13}));
    const IntPoly f = testing::random_poly(rng, std::uniform_int_distribution<int>(0, 8)(rng), -60, 60);
    const Integer c = testing::random_integer(rng, -100, 100);
    const auto r = roots_mod_p(f, c, p);
    CHECK(residues(r) == solve_congruence_bruteforce(f, c, p.as_integer()));
    CHECK(residues(r) == testing::enumerate_roots(f, c, p.as_integer()));

    const IntPoly g = f - IntPoly::constant(c);
    const FpPoly shifted = reduce_mod_p(g, p);
    if (!shifted.is_zero()) {
      // At most deg(f - c mod p) roots; exceeding it would force every coefficient to vanish mod p.
      CHECK(static_cast<int>(r.roots.size()) <= shifted.degree());
    } else {
      CHECK(r.roots.size() == p.value());
      for (const auto& coeff : g.coeffs()) {
        CHECK(coeff % static_cast<unsigned long>(p.value()) == 0);
      }
    }
    for (const auto& root : r.roots) {
      const std::uint64_t d = reduce_u64(eval_mod(derivative(f), from_u64(root.residue), p.as_integer()), p.value());
      CHECK(root.derivative_residue == d);
      CHECK(root.singular == (d == 0));
    }
  }
}

TEST_CASE("x^p - x + 1 has no roots mod p") {
  for (std::uint64_t pv : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    const IntPoly f = IntPoly::monomial(1, pv) - IntPoly::x() + IntPoly::constant(1);
    CHECK(roots_mod_p(f, 0, Prime(pv)).roots.empty());
    CHECK(testing::enumerate_roots(f, 0, from_u64(pv)).empty());
  }
}

TEST_CASE("roots_mod_p refuses unbounded exhaustion") {
  CHECK(code_of([] { roots_mod_p(IntPoly::x(), 0, Prime(1'000'000'007)); }) == ErrorCode::kBoundExceeded);
}
