#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "padyn/congruence.hpp"
#include "padyn/integer.hpp"
#include "padyn/padic.hpp"
#include "padyn/polynomial.hpp"

namespace padyn {

/// Solutions of f(x) = target (mod p^k) reachable by Hensel lifting.
struct Preimages {
  /// Lifts of the nonsingular roots mod p, in [0, p^k), ordered by residue mod p.
  std::vector<Integer> lifted;
  /// Singular roots mod p, left unexpanded.
  std::vector<RootModP> singular;
  /// Every residue mod p solved f(x) = target (mod p).
  bool degenerate = false;
};

/// target is reduced mod p^k first. Throws Error(kInvalidArgument) for k = 0.
Preimages preimages(const IntPoly& f, const Integer& target, const Prime& p, unsigned precision);

enum class NodeStatus {
  kExpanded,
  kSingularLeaf,
  kNoPreimageLeaf,
  kFrontier,
};

std::string_view to_string(NodeStatus status) noexcept;

struct BackwardNode {
  std::size_t id = 0;
  /// Residue mod p^k. Singular leaves carry their residue mod p instead,
  /// since they have no unique lift.
  Integer value;
  unsigned depth = 0;
  NodeStatus status = NodeStatus::kFrontier;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
};

/// A seed-to-frontier path; f(path[i+1]) = path[i] (mod p^k).
struct BackwardSequence {
  std::vector<Integer> path;
};

inline constexpr std::size_t kDefaultMaxNodes = 100'000;

struct TreeOptions {
  std::size_t max_nodes = kDefaultMaxNodes;
};

/// Tree of iterated preimages of a seed under f over Z/p^kZ. Nodes live in
/// an arena indexed by id; ids follow breadth-first order with siblings
/// sorted by residue mod p.
class BackwardTree {
 public:
  const Prime& prime() const noexcept { return p_; }
  unsigned precision() const noexcept { return precision_; }
  const IntPoly& polynomial() const noexcept { return polynomial_; }
  const Integer& seed() const noexcept { return seed_; }
  unsigned max_depth() const noexcept { return max_depth_; }
  Integer modulus() const { return p_.power(precision_); }

  /// False when the node budget ran out before expansion finished.
  bool complete() const noexcept { return complete_; }

  std::span<const BackwardNode> nodes() const noexcept { return nodes_; }
  const BackwardNode& node(std::size_t id) const { return nodes_.at(id); }
  const BackwardNode& root() const { return nodes_.front(); }

  std::size_t count_at_depth(unsigned depth) const;
  /// Same, excluding singular leaves.
  std::size_t preimage_count_at_depth(unsigned depth) const;

  /// True if some expansion hit the degenerate case (every residue mod p a root).
  bool has_degenerate_expansion() const noexcept { return degenerate_; }

  /// Paths from the seed to every node at max_depth(), in id order.
  std::vector<BackwardSequence> sequences() const;

 private:
  friend BackwardTree backward_tree(const IntPoly&, const Integer&, const Prime&, unsigned, unsigned,
                                    const TreeOptions&);
  BackwardTree(Prime p, unsigned precision, IntPoly polynomial, Integer seed, unsigned max_depth)
      : p_(p), precision_(precision), polynomial_(std::move(polynomial)), seed_(std::move(seed)), max_depth_(max_depth) {}

  Prime p_;
  unsigned precision_;
  IntPoly polynomial_;
  Integer seed_;
  unsigned max_depth_;
  bool complete_ = true;
  bool degenerate_ = false;
  std::vector<BackwardNode> nodes_;
};

/// Breadth-first backward expansion to the given depth. Exceeding
/// options.max_nodes stops expansion and returns the partial tree with
/// complete() == false; unexpanded nodes keep the frontier status.
BackwardTree backward_tree(const IntPoly& f, const Integer& seed, const Prime& p, unsigned precision,
                           unsigned depth, const TreeOptions& options = {});

struct CycleInfo {
  std::size_t tail_length = 0;
  std::size_t cycle_length = 0;

  friend bool operator==(const CycleInfo&, const CycleInfo&) = default;
};

struct ForwardOrbit {
  /// x0, f(x0), ..., f^steps(x0) mod p^k.
  std::vector<Integer> terms;
  /// Absent only if the cycle search limit was hit first.
  std::optional<CycleInfo> cycle;

  bool periodic() const noexcept { return cycle && cycle->tail_length == 0; }
  bool preperiodic() const noexcept { return cycle && cycle->tail_length > 0; }
};

inline constexpr std::size_t kDefaultCycleSearchLimit = 1'000'000;

/// Forward iterates mod p^k, plus tail/cycle lengths found by first-repeat
/// detection (which may iterate past `steps`, up to cycle_search_limit).
ForwardOrbit forward_orbit(const IntPoly& f, const Integer& x0, const Prime& p, unsigned precision, std::size_t steps,
                           std::size_t cycle_search_limit = kDefaultCycleSearchLimit);

/// sum_i |s_i - t_i| / p^i, exact. Throws Error(kLengthMismatch).
Rational distance_series(std::span<const Integer> s, std::span<const Integer> t, const Prime& p);

/// 2^-l for the first index l where s and t differ; 0 if equal.
/// Throws Error(kLengthMismatch).
Rational distance_first_difference(std::span<const Integer> s, std::span<const Integer> t);

}  // namespace padyn
