#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "padyn/backward.hpp"
#include "padyn/error.hpp"
#include "tree_checks.hpp"

using namespace padyn;

namespace {

const IntPoly kSquare = IntPoly::monomial(1, 2);

std::vector<Integer> values(const BackwardTree& tree, unsigned depth) {
  std::vector<Integer> out;
  for (const auto& n : tree.nodes()) {
    if (n.depth == depth) out.push_back(n.value);
  }
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

BackwardTree random_tree(std::mt19937_64& rng) {
  const Prime p(testing::pick(rng, {2, 3, 5, 7}));
  const unsigned k = std::uniform_int_distribution<unsigned>(1, 3)(rng);
  const unsigned depth = std::uniform_int_distribution<unsigned>(0, 4)(rng);
  const IntPoly f = testing::random_poly(rng, std::uniform_int_distribution<int>(1, 4)(rng), -20, 20);
  const Integer seed = testing::random_integer(rng, 0, 1000);
  return backward_tree(f, seed, p, k, depth);
}

}  // namespace

TEST_CASE("preimages examples") {
  SUBCASE("x^2 = 2 mod 49") {
    const auto pre = preimages(kSquare, 2, Prime(7), 2);
    CHECK(pre.lifted == std::vector<Integer>{10, 39});
    CHECK(pre.singular.empty());
    CHECK(testing::enumerate_roots(kSquare, 2, 49) == std::vector<Integer>{10, 39});
  }
  SUBCASE("3 is not a square mod 7") {
    const auto pre = preimages(kSquare, 3, Prime(7), 2);
    CHECK(pre.lifted.empty());
    CHECK(pre.singular.empty());
    CHECK(testing::enumerate_roots(kSquare, 3, 49).empty());
  }
  SUBCASE("x^2 = 0 mod 25 stops at the singular root") {
    const auto pre = preimages(kSquare, 0, Prime(5), 2);
    CHECK(pre.lifted.empty());
    REQUIRE(pre.singular.size() == 1);
    CHECK(pre.singular[0].residue == 0);
  }
  SUBCASE("target is reduced mod p^k") {
    CHECK(preimages(kSquare, 2 + 49 * 3, Prime(7), 2).lifted == std::vector<Integer>{10, 39});
  }
  CHECK(code_of([] { preimages(kSquare, 2, Prime(7), 0); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("backward_tree examples") {
  SUBCASE("x^2 from 2 mod 7, depth 2") {
    const auto tree = backward_tree(kSquare, 2, Prime(7), 1, 2);
    REQUIRE(tree.nodes().size() == 5);
    CHECK(values(tree, 1) == std::vector<Integer>{3, 4});
    CHECK(values(tree, 2) == std::vector<Integer>{2, 5});
    CHECK(tree.node(1).status == NodeStatus::kNoPreimageLeaf);
    CHECK(tree.node(2).status == NodeStatus::kExpanded);
    CHECK(tree.node(3).parent == 2);
    CHECK(tree.node(3).status == NodeStatus::kFrontier);
    CHECK(tree.complete());
    CHECK(testing::tree_violation(tree).empty());
  }
  SUBCASE("identity map gives a single path") {
    const auto tree = backward_tree(IntPoly::x(), 17, Prime(5), 3, 6);
    REQUIRE(tree.nodes().size() == 7);
    for (const auto& n : tree.nodes()) CHECK(n.value == 17);
    CHECK(tree.nodes().back().status == NodeStatus::kFrontier);
  }
  SUBCASE("branching bound is attained") {
    const auto tree = backward_tree(kSquare, 2, Prime(7), 1, 1);
    CHECK(tree.count_at_depth(1) == 2);
  }
  SUBCASE("depth 0 is just the seed") {
    const auto tree = backward_tree(kSquare, 100, Prime(7), 2, 0);
    REQUIRE(tree.nodes().size() == 1);
    CHECK(tree.root().value == 100 % 49);
    CHECK(tree.root().status == NodeStatus::kFrontier);
  }
  SUBCASE("singular roots become singular leaves") {
    const auto tree = backward_tree(kSquare, 0, Prime(5), 2, 3);
    REQUIRE(tree.nodes().size() == 2);
    CHECK(tree.node(1).status == NodeStatus::kSingularLeaf);
    CHECK(tree.node(1).value == 0);
  }
}

TEST_CASE("backward_tree budget") {
  // The full tree has 5 nodes.
  const auto tree = backward_tree(kSquare, 2, Prime(7), 1, 2, {3});
  CHECK_FALSE(tree.complete());
  CHECK(tree.nodes().size() <= 3);
  CHECK(testing::tree_violation(tree).empty());
  CHECK(code_of([] { backward_tree(kSquare, 2, Prime(7), 1, 2, {0}); }) == ErrorCode::kInvalidArgument);

  const auto exact = backward_tree(kSquare, 2, Prime(7), 1, 2, {5});
  CHECK(exact.complete());
}

TEST_CASE("random trees are sound and compatible across precision") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const BackwardTree tree = random_tree(rng);
    CAPTURE(trial);
    CHECK(testing::tree_violation(tree).empty());

    const Prime& p = tree.prime();
    const unsigned k = tree.precision();

    // Depth-1 children mod p match the precision-1 tree.
    const BackwardTree base = backward_tree(tree.polynomial(), tree.seed(), p, 1, std::min(1U, tree.max_depth()));
    std::vector<Integer> lifted_mod_p, base_values;
    for (const auto& n : tree.nodes()) {
      if (n.depth == 1) lifted_mod_p.push_back(mod(n.value, p.as_integer()));
    }
    for (const auto& n : base.nodes()) {
      if (n.depth == 1) base_values.push_back(n.value);
    }
    CHECK(lifted_mod_p == base_values);

    if (k > 1) {
      const BackwardTree lower = backward_tree(tree.polynomial(), tree.seed(), p, k - 1, tree.max_depth());
      const Integer m = p.power(k - 1);
      REQUIRE(lower.nodes().size() == tree.nodes().size());
      for (std::size_t i = 0; i < tree.nodes().size(); ++i) {
        const auto& hi = tree.nodes()[i];
        const auto& lo = lower.nodes()[i];
        CHECK(mod(hi.value, m) == lo.value);
        CHECK(hi.parent == lo.parent);
        CHECK(hi.status == lo.status);
        if (hi.parent && hi.status != NodeStatus::kSingularLeaf) {
          CHECK(testing::naive_eval_mod(tree.polynomial(), mod(hi.value, m), m) == mod(tree.nodes()[*hi.parent].value, m));
        }
      }
    }
  }
}

TEST_CASE("tree paths are backward sequences") {
  // 1 -> {1, 4} -> ... keeps branching through 1 since 1 is a square mod 5.
  const auto tree = backward_tree(kSquare, 1, Prime(5), 1, 4);
  const auto seqs = tree.sequences();
  CHECK_FALSE(seqs.empty());
  for (const auto& s : seqs) {
    REQUIRE(s.path.size() == 5);
    CHECK(s.path.front() == 1);
    for (std::size_t i = 0; i + 1 < s.path.size(); ++i) {
      CHECK(testing::naive_eval_mod(tree.polynomial(), s.path[i + 1], 5) == s.path[i]);
    }
  }
}

TEST_CASE("forward_orbit") {
  SUBCASE("x^2 from 3 mod 7") {
    const auto orbit = forward_orbit(kSquare, 3, Prime(7), 1, 3);
    CHECK(orbit.terms == std::vector<Integer>{3, 2, 4, 2});
    REQUIRE(orbit.cycle.has_value());
    CHECK(*orbit.cycle == CycleInfo{1, 2});
    CHECK(orbit.preperiodic());
  }
  SUBCASE("identity is a fixed point") {
    const auto orbit = forward_orbit(IntPoly::x(), 9, Prime(11), 2, 4);
    CHECK(orbit.terms == std::vector<Integer>(5, 9));
    CHECK(*orbit.cycle == CycleInfo{0, 1});
    CHECK(orbit.periodic());
  }
  SUBCASE("undoes a preimage step") {
    CHECK(forward_orbit(kSquare, 10, Prime(7), 2, 1).terms == std::vector<Integer>{10, 2});
  }
  SUBCASE("cycle found beyond the requested steps") {
    const auto orbit = forward_orbit(kSquare, 3, Prime(7), 1, 0);
    CHECK(orbit.terms.size() == 1);
    CHECK(*orbit.cycle == CycleInfo{1, 2});
  }
  SUBCASE("search limit leaves the cycle unknown") {
    const auto orbit = forward_orbit(IntPoly{1, 1}, 0, Prime(101), 3, 2, 10);
    CHECK_FALSE(orbit.cycle.has_value());
  }

  SUBCASE("matches quadratic first-repeat search") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
      const Prime p(testing::pick(rng, {2, 3, 5, 7}));
      const unsigned k = std::uniform_int_distribution<unsigned>(1, 3)(rng);
      const IntPoly f = testing::random_poly(rng, std::uniform_int_distribution<int>(0, 4)(rng), -10, 10);
      const Integer x0 = testing::random_integer(rng, 0, 500);
      const auto orbit = forward_orbit(f, x0, p, k, 5);
      const Integer m = p.power(k);

      std::vector<Integer> seen{mod(x0, m)};
      std::optional<CycleInfo> expected;
      while (!expected) {
        const Integer next = testing::naive_eval_mod(f, seen.back(), m);
        for (std::size_t j = 0; j < seen.size(); ++j) {
          if (seen[j] == next) expected = CycleInfo{j, seen.size() - j};
        }
        seen.push_back(next);
      }
      REQUIRE(orbit.cycle.has_value());
      CHECK(*orbit.cycle == *expected);
      while (seen.size() < orbit.terms.size()) seen.push_back(testing::naive_eval_mod(f, seen.back(), m));
      for (std::size_t i = 0; i < orbit.terms.size(); ++i) CHECK(orbit.terms[i] == seen[i]);
    }
  }
}

TEST_CASE("distances") {
  const std::vector<Integer> a{1, 0}, zero2{0, 0};
  const std::vector<Integer> s{0, 2, 0}, t{0, 0, 1};
  CHECK(distance_series(s, s, Prime(5)) == 0);
  CHECK(distance_series(a, zero2, Prime(5)) == 1);
  CHECK(distance_series(s, t, Prime(5)) == Rational(11, 25));

  const std::vector<Integer> u{1, 2, 3, 4}, v{1, 2, 3, 5}, w{9, 2, 3, 4};
  CHECK(distance_first_difference(u, u) == 0);
  CHECK(distance_first_difference(u, w) == 1);
  CHECK(distance_first_difference(u, v) == Rational(1, 8));

  CHECK(code_of([&] { distance_series(a, s, Prime(5)); }) == ErrorCode::kLengthMismatch);
  CHECK(code_of([&] { distance_first_difference(a, s); }) == ErrorCode::kLengthMismatch);
}
