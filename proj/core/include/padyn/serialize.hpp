#pragma once

#include <string>
#include <vector>

#include "padyn/backward.hpp"
#include "padyn/polynomial.hpp"

namespace padyn {

/// Canonical coefficient list, constant term first, as decimal strings.
std::vector<std::string> poly_coefficients(const IntPoly& f);

/// Tree as JSON. Field order is fixed so output is byte-stable:
/// header {p, k, modulus, polynomial, polynomial_text, seed, depth, complete,
/// node_count, nodes}, each node {id, value, depth, status, parent}.
/// Arbitrary-size integers are emitted as decimal strings.
std::string tree_to_json(const BackwardTree& tree, int indent = 2);

/// Graphviz digraph. Edges run parent to child with dir=back, so arrows
/// follow f (child maps to parent). Leaves are styled by status.
std::string tree_to_dot(const BackwardTree& tree);

}  // namespace padyn
