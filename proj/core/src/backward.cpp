#include "padyn/backward.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "padyn/error.hpp"
#include "padyn/hensel.hpp"

namespace padyn {

std::string_view to_string(NodeStatus status) noexcept {
  switch (status) {
    case NodeStatus::kExpanded: return "expanded";
    case NodeStatus::kSingularLeaf: return "singular-leaf";
    case NodeStatus::kNoPreimageLeaf: return "no-preimage-leaf";
    case NodeStatus::kFrontier: return "frontier";
  }
  return "unknown";
}

Preimages preimages(const IntPoly& f, const Integer& target, const Prime& p, unsigned precision) {
  if (precision == 0) throw Error(ErrorCode::kInvalidArgument, "precision must be at least 1");
  const Integer reduced = mod(target, p.power(precision));
  const RootsModP roots = roots_mod_p(f, reduced, p);

  Preimages out;
  out.degenerate = roots.degenerate;
  for (const RootModP& root : roots.roots) {
    if (root.singular) {
      out.singular.push_back(root);
    } else {
      out.lifted.push_back(hensel_lift(f, from_u64(root.residue), precision, p, reduced).value());
    }
  }
  return out;
}

std::size_t BackwardTree::count_at_depth(unsigned depth) const {
  return static_cast<std::size_t>(
      std::count_if(nodes_.begin(), nodes_.end(), [depth](const BackwardNode& n) { return n.depth == depth; }));
}

std::size_t BackwardTree::preimage_count_at_depth(unsigned depth) const {
  return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [depth](const BackwardNode& n) {
    return n.depth == depth && n.status != NodeStatus::kSingularLeaf;
  }));
}

std::vector<BackwardSequence> BackwardTree::sequences() const {
  std::vector<BackwardSequence> out;
  for (const BackwardNode& n : nodes_) {
    if (n.status != NodeStatus::kFrontier || n.depth != max_depth_) continue;
    BackwardSequence seq;
    for (const BackwardNode* cur = &n;; cur = &nodes_[*cur->parent]) {
      seq.path.push_back(cur->value);
      if (!cur->parent) break;
    }
    std::reverse(seq.path.begin(), seq.path.end());
    out.push_back(std::move(seq));
  }
  return out;
}

BackwardTree backward_tree(const IntPoly& f, const Integer& seed, const Prime& p, unsigned precision, unsigned depth,
                           const TreeOptions& options) {
  if (precision == 0) throw Error(ErrorCode::kInvalidArgument, "precision must be at least 1");
  if (options.max_nodes == 0) throw Error(ErrorCode::kInvalidArgument, "node budget must be positive");

  const Integer modulus = p.power(precision);
  BackwardTree tree(p, precision, f, mod(seed, modulus), depth);
  tree.nodes_.push_back({0, tree.seed_, 0, NodeStatus::kFrontier, std::nullopt, {}});

  struct Child {
    std::uint64_t residue;
    Integer value;
    bool singular;
  };

  // The arena doubles as the breadth-first queue.
  for (std::size_t id = 0; id < tree.nodes_.size(); ++id) {
    if (tree.nodes_[id].status == NodeStatus::kSingularLeaf || tree.nodes_[id].depth >= depth) continue;

    const Preimages pre = preimages(f, tree.nodes_[id].value, p, precision);
    tree.degenerate_ = tree.degenerate_ || pre.degenerate;

    std::vector<Child> children;
    for (const Integer& v : pre.lifted) children.push_back({reduce_u64(v, p.value()), v, false});
    for (const RootModP& r : pre.singular) children.push_back({r.residue, from_u64(r.residue), true});
    std::sort(children.begin(), children.end(), [](const Child& a, const Child& b) { return a.residue < b.residue; });

    if (children.empty()) {
      tree.nodes_[id].status = NodeStatus::kNoPreimageLeaf;
      continue;
    }
    if (tree.nodes_.size() + children.size() > options.max_nodes) {
      tree.complete_ = false;
      break;
    }
    tree.nodes_[id].status = NodeStatus::kExpanded;
    const unsigned child_depth = tree.nodes_[id].depth + 1;
    for (Child& c : children) {
      const std::size_t child_id = tree.nodes_.size();
      tree.nodes_.push_back({child_id, std::move(c.value), child_depth,
                             c.singular ? NodeStatus::kSingularLeaf : NodeStatus::kFrontier, id, {}});
      tree.nodes_[id].children.push_back(child_id);
    }
  }
  return tree;
}

ForwardOrbit forward_orbit(const IntPoly& f, const Integer& x0, const Prime& p, unsigned precision, std::size_t steps,
                           std::size_t cycle_search_limit) {
  if (precision == 0) throw Error(ErrorCode::kInvalidArgument, "precision must be at least 1");
  const Integer modulus = p.power(precision);

  ForwardOrbit out;
  Integer x = mod(x0, modulus);
  out.terms.reserve(steps + 1);
  out.terms.push_back(x);
  for (std::size_t i = 0; i < steps; ++i) {
    x = eval_mod(f, x, modulus);
    out.terms.push_back(x);
  }

  // The ring is finite, so the orbit repeats within p^k iterations.
  std::map<Integer, std::size_t> seen;
  Integer y = out.terms.front();
  for (std::size_t i = 0; i <= cycle_search_limit; ++i) {
    if (auto [it, inserted] = seen.try_emplace(y, i); !inserted) {
      out.cycle = CycleInfo{it->second, i - it->second};
      break;
    }
    y = i + 1 < out.terms.size() ? out.terms[i + 1] : eval_mod(f, y, modulus);
  }
  return out;
}

}  // namespace padyn
