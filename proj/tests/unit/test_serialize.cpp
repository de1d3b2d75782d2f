#include <doctest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "padyn/serialize.hpp"

using namespace padyn;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(PADYN_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

const IntPoly kSquare = IntPoly::monomial(1, 2);

}  // namespace

TEST_CASE("poly_coefficients") {
  CHECK(poly_coefficients(IntPoly{2, -7, 1}) == std::vector<std::string>{"2", "-7", "1"});
  CHECK(poly_coefficients(IntPoly{}).empty());
}

TEST_CASE("tree JSON matches the golden file") {
  const auto tree = backward_tree(kSquare, 2, Prime(7), 1, 2);
  CHECK(tree_to_json(tree) == read_golden("tree_x2_seed2_p7.json"));
}

TEST_CASE("tree DOT matches the golden file") {
  const auto tree = backward_tree(kSquare, 2, Prime(7), 1, 2);
  const std::string dot = tree_to_dot(tree);
  CHECK(dot == read_golden("tree_x2_seed2_p7.dot"));
  CHECK(count(dot, "[label=") == 5);
  CHECK(count(dot, "->") == 4);
}

TEST_CASE("singular leaves are marked in DOT") {
  const auto tree = backward_tree(kSquare, 0, Prime(5), 2, 2);
  const std::string dot = tree_to_dot(tree);
  CHECK(dot.find("0 (mod 5), singular") != std::string::npos);
  CHECK(dot.find("shape=diamond") != std::string::npos);
}

TEST_CASE("serialization is deterministic and parses back") {
  const IntPoly f{3, 0, 1, 1};
  const std::string a = tree_to_json(backward_tree(f, 4, Prime(5), 3, 4));
  const std::string b = tree_to_json(backward_tree(f, 4, Prime(5), 3, 4));
  CHECK(a == b);
  CHECK(tree_to_dot(backward_tree(f, 4, Prime(5), 3, 4)) == tree_to_dot(backward_tree(f, 4, Prime(5), 3, 4)));

  const auto doc = nlohmann::json::parse(a);
  CHECK(doc["node_count"] == doc["nodes"].size());
  CHECK(doc["modulus"] == "125");
  for (const auto& node : doc["nodes"]) CHECK(node["value"].is_string());

  const auto incomplete = nlohmann::json::parse(tree_to_json(backward_tree(kSquare, 2, Prime(7), 1, 2, {3})));
  CHECK(incomplete["complete"] == false);
}
