#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include "padyn/padyn.hpp"

namespace padyn::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { kTable, kJson, kDot };

/// Bad flag values, as opposed to domain failures.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::string_view kGrammarHelp =
    "Polynomials are written in x with integer coefficients, e.g. \"x^2 - 7x + 2\" or \"(x+1)^2\".\n"
    "'^' binds tighter than multiplication (explicit '*' or juxtaposition like 7x),\n"
    "which binds tighter than '+' and '-'; unary minus is allowed. Exponents are\n"
    "nonnegative integer literals no larger than 10000.\n"
    "\n"
    "Exit codes: 0 success, 1 domain error (composite prime, singular seed, node\n"
    "budget exhausted, ...), 2 usage error. PADIC_DYN_MAX_NODES overrides the\n"
    "default node budget for `tree`.";

struct Flags {
  std::string poly;
  std::string prime;
  std::string precision = "1";
  std::string seed;
  std::string depth = "1";
  std::string target = "0";
  std::string modulus;
  std::string format = "table";
  std::string max_nodes;
  std::string steps = "10";
  std::string bound = std::to_string(kDefaultOracleBound);
  std::string lhs;
  std::string rhs;
  std::string metric = "series";
  unsigned max_modulus_bits = 256;
};

Integer integer_flag(const std::string& name, const std::string& text) {
  try {
    return parse_integer(text);
  } catch (const Error&) {
    throw UsageError("--" + name + " expects an integer, got '" + text + "'");
  }
}

unsigned unsigned_flag(const std::string& name, const std::string& text, unsigned min) {
  const Integer v = integer_flag(name, text);
  if (v < min || v > std::numeric_limits<unsigned>::max()) {
    throw UsageError("--" + name + " must be an integer in [" + std::to_string(min) + ", " +
                     std::to_string(std::numeric_limits<unsigned>::max()) + "]");
  }
  return static_cast<unsigned>(v.get_ui());
}

IntPoly poly_flag(const std::string& text) {
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--poly: ") + e.what());
  }
}

std::vector<Integer> sequence_flag(const std::string& name, const std::string& text) {
  std::vector<Integer> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("--" + name + " has an empty entry");
    out.push_back(integer_flag(name, item.substr(first, last - first + 1)));
  }
  if (out.empty()) throw UsageError("--" + name + " must list at least one integer");
  return out;
}

Format format_flag(const std::string& text) {
  if (text == "table") return Format::kTable;
  if (text == "json") return Format::kJson;
  if (text == "dot") return Format::kDot;
  throw UsageError("--format must be one of json, dot, table");
}

void check_modulus_size(const Prime& p, unsigned k, unsigned max_bits) {
  // Compare bit lengths first so a huge k never materializes p^k.
  const double approx_bits = static_cast<double>(k) * std::log2(static_cast<double>(p.value()));
  if (approx_bits > max_bits + 1.0 || p.power(k) > pow(Integer(2), max_bits)) {
    throw Error(ErrorCode::kBoundExceeded, "p^k exceeds 2^" + std::to_string(max_bits) +
                                               "; raise --max-modulus-bits to allow it");
  }
}

std::size_t node_budget(const std::string& flag) {
  std::string text = flag;
  std::string source = "--max-nodes";
  if (text.empty()) {
    if (const char* env = std::getenv("PADIC_DYN_MAX_NODES"); env != nullptr && *env != '\0') {
      text = env;
      source = "PADIC_DYN_MAX_NODES";
    }
  }
  if (text.empty()) return kDefaultMaxNodes;
  Integer v;
  try {
    v = parse_integer(text);
  } catch (const Error&) {
    throw UsageError(source + " expects a positive integer, got '" + text + "'");
  }
  if (v < 1 || !fits_u64(v)) throw UsageError(source + " expects a positive integer, got '" + text + "'");
  return static_cast<std::size_t>(to_u64(v));
}

std::vector<std::string> strings(std::span<const Integer> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::string joined(std::span<const Integer> values, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += to_string(values[i]);
  }
  return out;
}

void require_not_dot(Format format, std::string_view command) {
  if (format == Format::kDot) throw UsageError("--format dot is only available for `tree`, not `" + std::string(command) + "`");
}

// Each command delegates to exactly one core operation and renders it.

void cmd_roots(const Flags& flags, Format format, std::ostream& out) {
  require_not_dot(format, "roots");
  const IntPoly f = poly_flag(flags.poly);
  const Prime p = Prime::from_integer(integer_flag("prime", flags.prime));
  const Integer target = integer_flag("target", flags.target);
  const RootsModP result = roots_mod_p(f, target, p);

  if (format == Format::kJson) {
    ordered_json doc;
    doc["command"] = "roots";
    doc["p"] = p.value();
    doc["polynomial"] = poly_coefficients(f);
    doc["target"] = to_string(target);
    doc["degenerate"] = result.degenerate;
    ordered_json roots = ordered_json::array();
    for (const RootModP& r : result.roots) {
      roots.push_back({{"residue", r.residue}, {"singular", r.singular}, {"derivative_residue", r.derivative_residue}});
    }
    doc["roots"] = std::move(roots);
    out << doc.dump(2) << '\n';
    return;
  }
  out << "roots of " << print_poly(f) << " = " << to_string(target) << " (mod " << p.value() << "): "
      << result.roots.size() << (result.degenerate ? " (every residue)" : "") << '\n';
  for (const RootModP& r : result.roots) {
    out << "  " << r.residue << "  f'=" << r.derivative_residue << "  " << (r.singular ? "singular" : "nonsingular")
        << '\n';
  }
}

void cmd_oracle(const Flags& flags, Format format, std::ostream& out) {
  require_not_dot(format, "oracle");
  const IntPoly f = poly_flag(flags.poly);
  const Integer m = integer_flag("modulus", flags.modulus);
  if (m < 2) throw UsageError("--modulus must be at least 2");
  const Integer target = integer_flag("target", flags.target);
  const Integer bound = integer_flag("bound", flags.bound);
  const std::vector<Integer> solutions = solve_congruence_bruteforce(f, target, m, bound);

  if (format == Format::kJson) {
    ordered_json doc;
    doc["command"] = "oracle";
    doc["modulus"] = to_string(m);
    doc["polynomial"] = poly_coefficients(f);
    doc["target"] = to_string(target);
    doc["count"] = solutions.size();
    doc["solutions"] = strings(solutions);
    out << doc.dump(2) << '\n';
    return;
  }
  out << "solutions of " << print_poly(f) << " = " << to_string(target) << " (mod " << to_string(m)
      << "): " << solutions.size() << '\n';
  out << "  {" << joined(solutions) << "}\n";
}

void cmd_lift(const Flags& flags, Format format, std::ostream& out) {
  require_not_dot(format, "lift");
  const IntPoly f = poly_flag(flags.poly);
  const Prime p = Prime::from_integer(integer_flag("prime", flags.prime));
  const unsigned k = unsigned_flag("precision", flags.precision, 1);
  check_modulus_size(p, k, flags.max_modulus_bits);
  if (flags.seed.empty()) throw UsageError("--seed is required");
  const Integer seed = integer_flag("seed", flags.seed);
  const Integer target = integer_flag("target", flags.target);
  const LiftedRoot root = hensel_lift(f, seed, k, p, target);
  const PadicInt digits = root.as_padic();

  if (format == Format::kJson) {
    ordered_json doc;
    doc["command"] = "lift";
    doc["p"] = p.value();
    doc["k"] = k;
    doc["polynomial"] = poly_coefficients(f);
    doc["target"] = to_string(target);
    doc["seed"] = to_string(seed);
    doc["ladder"] = strings(root.ladder());
    doc["value"] = to_string(root.value());
    doc["digits"] = std::vector<std::uint64_t>(digits.digits().begin(), digits.digits().end());
    out << doc.dump(2) << '\n';
    return;
  }
  out << "lift of " << to_string(seed) << " for " << print_poly(f) << " = " << to_string(target) << " over Z_"
      << p.value() << '\n';
  for (std::size_t j = 0; j < root.ladder().size(); ++j) {
    out << "  mod " << p.value() << "^" << (j + 1) << ": " << to_string(root.ladder()[j]) << '\n';
  }
  out << "  digits:";
  for (std::uint64_t d : digits.digits()) out << ' ' << d;
  out << '\n';
}

void cmd_preimages(const Flags& flags, Format format, std::ostream& out) {
  require_not_dot(format, "preimages");
  const IntPoly f = poly_flag(flags.poly);
  const Prime p = Prime::from_integer(integer_flag("prime", flags.prime));
  const unsigned k = unsigned_flag("precision", flags.precision, 1);
  check_modulus_size(p, k, flags.max_modulus_bits);
  const Integer target = integer_flag("target", flags.target);
  const Preimages result = preimages(f, target, p, k);

  if (format == Format::kJson) {
    ordered_json doc;
    doc["command"] = "preimages";
    doc["p"] = p.value();
    doc["k"] = k;
    doc["modulus"] = to_string(p.power(k));
    doc["polynomial"] = poly_coefficients(f);
    doc["target"] = to_string(mod(target, p.power(k)));
    doc["degenerate"] = result.degenerate;
    doc["lifted"] = strings(result.lifted);
    ordered_json singular = ordered_json::array();
    for (const RootModP& r : result.singular) singular.push_back(r.residue);
    doc["singular"] = std::move(singular);
    out << doc.dump(2) << '\n';
    return;
  }
  out << "preimages of " << to_string(mod(target, p.power(k))) << " under " << print_poly(f) << " (mod "
      << p.value() << "^" << k << ")\n";
  out << "  lifted:   {" << joined(result.lifted) << "}\n";
  out << "  singular: {";
  for (std::size_t i = 0; i < result.singular.size(); ++i) out << (i ? ", " : "") << result.singular[i].residue;
  out << "}\n";
}

void cmd_tree(const Flags& flags, Format format, std::ostream& out) {
  const IntPoly f = poly_flag(flags.poly);
  const Prime p = Prime::from_integer(integer_flag("prime", flags.prime));
  const unsigned k = unsigned_flag("precision", flags.precision, 1);
  check_modulus_size(p, k, flags.max_modulus_bits);
  if (flags.seed.empty()) throw UsageError("--seed is required");
  const Integer seed = integer_flag("seed", flags.seed);
  const unsigned depth = unsigned_flag("depth", flags.depth, 0);
  const std::size_t budget = node_budget(flags.max_nodes);

  const BackwardTree tree = backward_tree(f, seed, p, k, depth, {budget});
  if (!tree.complete()) {
    throw Error(ErrorCode::kBudgetExhausted, "node budget of " + std::to_string(budget) +
                                                 " exhausted after " + std::to_string(tree.nodes().size()) +
                                                 " nodes; raise --max-nodes or PADIC_DYN_MAX_NODES");
  }
  if (format == Format::kJson) {
    out << tree_to_json(tree) << '\n';
  } else if (format == Format::kDot) {
    out << tree_to_dot(tree);
  } else {
    out << "backward tree of " << to_string(tree.seed()) << " under " << print_poly(f) << " (mod " << p.value()
        << "^" << k << "), depth " << depth << ", " << tree.nodes().size() << " nodes\n";
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
      const BackwardNode& n = tree.node(stack.back());
      stack.pop_back();
      out << std::string(2 * (n.depth + 1), ' ') << to_string(n.value) << "  [" << to_string(n.status) << "]\n";
      stack.insert(stack.end(), n.children.rbegin(), n.children.rend());
    }
  }
}

void cmd_orbit(const Flags& flags, Format format, std::ostream& out) {
  require_not_dot(format, "orbit");
  const IntPoly f = poly_flag(flags.poly);
  const Prime p = Prime::from_integer(integer_flag("prime", flags.prime));
  const unsigned k = unsigned_flag("precision", flags.precision, 1);
  check_modulus_size(p, k, flags.max_modulus_bits);
  if (flags.seed.empty()) throw UsageError("--seed is required");
  const Integer x0 = integer_flag("seed", flags.seed);
  const unsigned steps = unsigned_flag("steps", flags.steps, 0);
  const ForwardOrbit orbit = forward_orbit(f, x0, p, k, steps);

  if (format == Format::kJson) {
    ordered_json doc;
    doc["command"] = "orbit";
    doc["p"] = p.value();
    doc["k"] = k;
    doc["polynomial"] = poly_coefficients(f);
    doc["seed"] = to_string(mod(x0, p.power(k)));
    doc["steps"] = steps;
    doc["terms"] = strings(orbit.terms);
    if (orbit.cycle) {
      doc["cycle"] = {{"tail_length", orbit.cycle->tail_length},
                      {"cycle_length", orbit.cycle->cycle_length},
                      {"preperiodic", orbit.preperiodic()}};
    } else {
      doc["cycle"] = nullptr;
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "orbit of " << to_string(orbit.terms.front()) << " under " << print_poly(f) << " (mod " << p.value() << "^"
      << k << ")\n";
  out << "  " << joined(orbit.terms, " -> ") << '\n';
  if (orbit.cycle) {
    out << "  " << (orbit.preperiodic() ? "pre-periodic" : "periodic") << ": tail " << orbit.cycle->tail_length
        << ", cycle length " << orbit.cycle->cycle_length << '\n';
  } else {
    out << "  no repeat found within the search limit\n";
  }
}

void cmd_dist(const Flags& flags, Format format, std::ostream& out) {
  require_not_dot(format, "dist");
  const std::vector<Integer> lhs = sequence_flag("lhs", flags.lhs);
  const std::vector<Integer> rhs = sequence_flag("rhs", flags.rhs);
  Rational d;
  std::optional<Prime> p;
  if (flags.metric == "series") {
    if (flags.prime.empty()) throw UsageError("--prime is required for the series metric");
    p = Prime::from_integer(integer_flag("prime", flags.prime));
    d = distance_series(lhs, rhs, *p);
  } else if (flags.metric == "first") {
    d = distance_first_difference(lhs, rhs);
  } else {
    throw UsageError("--metric must be 'series' or 'first'");
  }

  if (format == Format::kJson) {
    ordered_json doc;
    doc["command"] = "dist";
    doc["metric"] = flags.metric;
    doc["p"] = p ? ordered_json(p->value()) : ordered_json(nullptr);
    doc["lhs"] = strings(lhs);
    doc["rhs"] = strings(rhs);
    doc["distance"] = to_string(d);
    out << doc.dump(2) << '\n';
    return;
  }
  out << "d = " << to_string(d) << '\n';
}

bool wants_json(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format=json") return true;
    if (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json") return true;
  }
  return false;
}

int report(bool json, std::ostream& out, std::ostream& err, std::string_view code, const std::string& message,
           int exit_code) {
  if (json) {
    ordered_json doc;
    doc["error"] = {{"code", code}, {"message", message}, {"exit_code", exit_code}};
    out << doc.dump(2) << '\n';
  } else {
    err << "error: " << message << '\n';
  }
  return exit_code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Backward orbits of integer polynomials over the p-adic integers.", "padic-dyn"};
  app.footer(std::string(kGrammarHelp));
  app.require_subcommand(1);

  Flags flags;
  std::function<void(const Flags&, Format, std::ostream&)> action;

  const auto add = [&](const char* name, const char* description, auto handler) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--format", flags.format, "Output format: json, dot (tree only), or table")
        ->capture_default_str();
    sub->callback([&action, handler] { action = handler; });
    return sub;
  };

  CLI::App* roots = add("roots", "Roots of f(x) = target mod p, classified as singular or nonsingular", cmd_roots);
  roots->add_option("--poly", flags.poly, "Polynomial in x")->required();
  roots->add_option("--prime", flags.prime, "Prime p")->required();
  roots->add_option("--target", flags.target, "Right-hand side")->capture_default_str();

  CLI::App* oracle = add("oracle", "Exhaustive solutions of f(x) = target mod any modulus m", cmd_oracle);
  oracle->add_option("--poly", flags.poly, "Polynomial in x")->required();
  oracle->add_option("--modulus", flags.modulus, "Modulus m >= 2")->required();
  oracle->add_option("--target", flags.target, "Right-hand side")->capture_default_str();
  oracle->add_option("--bound", flags.bound, "Largest modulus searched")->capture_default_str();

  CLI::App* lift = add("lift", "Hensel-lift a simple root mod p to precision p^k", cmd_lift);
  lift->add_option("--poly", flags.poly, "Polynomial in x")->required();
  lift->add_option("--prime", flags.prime, "Prime p")->required();
  lift->add_option("--precision", flags.precision, "Precision k")->capture_default_str();
  lift->add_option("--seed", flags.seed, "Simple root mod p")->required();
  lift->add_option("--target", flags.target, "Solve f(x) = target")->capture_default_str();

  CLI::App* pre = add("preimages", "Lifted preimages of a target under f mod p^k", cmd_preimages);
  pre->add_option("--poly", flags.poly, "Polynomial in x")->required();
  pre->add_option("--prime", flags.prime, "Prime p")->required();
  pre->add_option("--precision", flags.precision, "Precision k")->capture_default_str();
  pre->add_option("--target", flags.target, "Point whose preimages are wanted")->capture_default_str();

  CLI::App* tree = add("tree", "Backward preimage tree of a seed to a given depth", cmd_tree);
  tree->add_option("--poly", flags.poly, "Polynomial in x")->required();
  tree->add_option("--prime", flags.prime, "Prime p")->required();
  tree->add_option("--precision", flags.precision, "Precision k")->capture_default_str();
  tree->add_option("--seed", flags.seed, "Root of the tree")->required();
  tree->add_option("--depth", flags.depth, "Expansion depth")->capture_default_str();
  tree->add_option("--max-nodes", flags.max_nodes, "Node budget (default 100000 or PADIC_DYN_MAX_NODES)");

  CLI::App* orbit = add("orbit", "Forward orbit mod p^k with cycle detection", cmd_orbit);
  orbit->add_option("--poly", flags.poly, "Polynomial in x")->required();
  orbit->add_option("--prime", flags.prime, "Prime p")->required();
  orbit->add_option("--precision", flags.precision, "Precision k")->capture_default_str();
  orbit->add_option("--seed", flags.seed, "Starting point x0")->required();
  orbit->add_option("--steps", flags.steps, "Number of iterations")->capture_default_str();

  CLI::App* dist = add("dist", "Distance between two finite sequences", cmd_dist);
  dist->add_option("--lhs", flags.lhs, "Comma-separated integers")->required();
  dist->add_option("--rhs", flags.rhs, "Comma-separated integers")->required();
  dist->add_option("--metric", flags.metric, "series (sum |s_i - t_i| / p^i) or first (2^-l)")
      ->capture_default_str();
  dist->add_option("--prime", flags.prime, "Prime p for the series metric");

  for (CLI::App* sub : {lift, pre, tree, orbit}) {
    sub->add_option("--max-modulus-bits", flags.max_modulus_bits, "Largest allowed p^k, as a power of two")
        ->capture_default_str();
  }

  const bool json = wants_json(args);
  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("padic-dyn");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return report(json, out, err, "usage_error", e.what(), kExitUsageError);
  }

  try {
    action(flags, format_flag(flags.format), out);
    return kExitOk;
  } catch (const UsageError& e) {
    return report(json, out, err, "usage_error", e.what(), kExitUsageError);
  } catch (const Error& e) {
    return report(json, out, err, to_string(e.code()), e.what(), kExitDomainError);
  }
}

}  // namespace padyn::cli
