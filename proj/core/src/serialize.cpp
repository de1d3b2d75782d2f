#include "padyn/serialize.hpp"

#include <json.hpp>
#include <sstream>

#include "padyn/parse.hpp"

namespace padyn {

std::vector<std::string> poly_coefficients(const IntPoly& f) {
  std::vector<std::string> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(to_string(c));
  return out;
}

std::string tree_to_json(const BackwardTree& tree, int indent) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["p"] = tree.prime().value();
  doc["k"] = tree.precision();
  doc["modulus"] = to_string(tree.modulus());
  doc["polynomial"] = poly_coefficients(tree.polynomial());
  doc["polynomial_text"] = print_poly(tree.polynomial());
  doc["seed"] = to_string(tree.seed());
  doc["depth"] = tree.max_depth();
  doc["complete"] = tree.complete();
  doc["node_count"] = tree.nodes().size();

  ordered_json nodes = ordered_json::array();
  for (const BackwardNode& n : tree.nodes()) {
    ordered_json node;
    node["id"] = n.id;
    node["value"] = to_string(n.value);
    node["depth"] = n.depth;
    node["status"] = std::string(to_string(n.status));
    node["parent"] = n.parent ? ordered_json(*n.parent) : ordered_json(nullptr);
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  return doc.dump(indent);
}

std::string tree_to_dot(const BackwardTree& tree) {
  const std::string p = std::to_string(tree.prime().value());
  const std::string k = std::to_string(tree.precision());

  std::ostringstream out;
  out << "digraph backward_tree {\n";
  out << "  label=\"preimages of " << to_string(tree.seed()) << " under " << print_poly(tree.polynomial())
      << " mod " << p << "^" << k << (tree.complete() ? "" : " (incomplete)") << "\";\n";
  out << "  node [shape=ellipse];\n";
  for (const BackwardNode& n : tree.nodes()) {
    out << "  n" << n.id << " [label=\"" << to_string(n.value);
    switch (n.status) {
      case NodeStatus::kSingularLeaf:
        out << " (mod " << p << "), singular\", shape=diamond, style=filled, fillcolor=lightgray";
        break;
      case NodeStatus::kNoPreimageLeaf:
        out << " (mod " << p << "^" << k << ")\", shape=box, style=dashed";
        break;
      default:
        out << " (mod " << p << "^" << k << ")\"";
        break;
    }
    out << "];\n";
  }
  for (const BackwardNode& n : tree.nodes()) {
    if (n.parent) out << "  n" << *n.parent << " -> n" << n.id << " [dir=back];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace padyn
