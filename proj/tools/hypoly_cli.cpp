// hypoly: compute hypergraph polynomials, emit families, run identity suites.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypoly/bond_lattice.hpp"
#include "hypoly/chromatic.hpp"
#include "hypoly/document.hpp"
#include "hypoly/elimination.hpp"
#include "hypoly/errors.hpp"
#include "hypoly/families.hpp"
#include "hypoly/specials.hpp"
#include "hypoly/suites.hpp"

namespace {

using namespace hypoly;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kInvalid = 3;
constexpr int kBudget = 4;
constexpr int kVerifyFailed = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Hypergraph load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_hypergraph(text.str());
}

struct ComputeArgs {
  std::string input;
  std::string poly = "xi";
  std::string algo = "default";
  bool uniform_t = false;
  std::vector<std::string> subst;
  std::string format = "text";
  std::uint64_t max_colorings = kColoringBudget;
  std::size_t max_lattice_vertices = kLatticeMaxVertices;
};

std::map<VarKey, Rational> parse_bindings(const std::vector<std::string>& items,
                                          const Hypergraph& h) {
  std::map<VarKey, Rational> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--subst expects name=value, got " + item);
    const auto name = item.substr(0, eq);
    const auto var = VarKey::parse(name);
    if (!var) throw UsageError("unknown variable in --subst: " + name);
    if (var->is_edge() && !h.has_edge(var->edge_id())) {
      throw UsageError("unknown edge in --subst: " + name);
    }
    Rational value;
    try {
      value = parse_rational(item.substr(eq + 1));
    } catch (const std::invalid_argument&) {
      throw UsageError("bad value in --subst: " + item);
    }
    out[*var] = value;
  }
  return out;
}

unsigned small_count(const std::map<VarKey, Rational>& bindings, VarKey::Kind kind) {
  auto it = bindings.find(VarKey(kind));
  if (it == bindings.end()) throw UsageError("--algo oracle needs integer --subst p=.. and q=..");
  const auto& v = it->second;
  if (v.get_den() != 1 || v < 0 || v > 1000) {
    throw UsageError("--algo oracle needs small non-negative integers for p and q");
  }
  return static_cast<unsigned>(v.get_num().get_ui());
}

Poly run_compute(const ComputeArgs& args, const Hypergraph& h,
                 const std::map<VarKey, Rational>& bindings) {
  const auto& poly = args.poly;
  const auto& algo = args.algo;
  auto incompatible = [&]() -> Poly {
    throw UsageError("--algo " + algo + " is not available for --poly " + poly);
  };
  RecursionOptions options;
  options.uniform_t = args.uniform_t;

  if (poly == "xi") {
    if (algo == "subset") return xi_subset(h);
    if (algo == "default" || algo == "recursive") return xi_recursive(h, options);
    return incompatible();
  }
  if (poly == "chromatic") {
    if (algo == "default" || algo == "subset") return chromatic_poly(h);
    if (algo == "recursive") return chromatic_recursive(h, options);
    if (algo == "mobius") return chromatic_via_mobius(h, args.max_lattice_vertices);
    if (algo == "sections") return section_decomposition(h);
    if (algo == "bridge") return chromatic_via_xi(h);
    if (algo == "oracle") {
      return chromatic_count(h, small_count(bindings, VarKey::Kind::P),
                             small_count(bindings, VarKey::Kind::Q), args.max_colorings);
    }
    return incompatible();
  }
  if (poly == "transversal" || poly == "tutte") {
    if (algo != "default" && algo != "subset") return incompatible();
    return poly == "tutte" ? tutte_poly(h) : transversal_poly(h);
  }
  const auto kind = parse_bridge_kind(poly);
  if (!kind) throw UsageError("unknown --poly " + poly);
  if (algo == "bridge") return bridge(*kind, h);
  if (algo != "default" && algo != "subset") return incompatible();
  switch (*kind) {
    case BridgeKind::Covering: return covering_poly(h);
    case BridgeKind::Matching: return matching_poly(h);
    case BridgeKind::Potts: return potts_poly(h);
    case BridgeKind::Section: return section_poly(h);
    case BridgeKind::Coboundary: return coboundary_poly(h);
    case BridgeKind::Chromatic: break;
  }
  return incompatible();
}

int cmd_compute(const ComputeArgs& args) {
  const auto h = load(args.input);
  const auto bindings = parse_bindings(args.subst, h);
  Poly result = run_compute(args, h, bindings);
  if (args.uniform_t) result = collapse_t(result);

  // Integer values substitute symbolically; anything else is an exact
  // evaluation and needs every remaining variable bound.
  std::map<VarKey, Poly> integral;
  std::map<VarKey, Rational> fractional;
  for (const auto& [var, value] : bindings) {
    if (value.get_den() == 1) {
      integral.emplace(var, Poly(Integer(value.get_num())));
    } else {
      fractional.emplace(var, value);
    }
  }
  if (args.algo == "oracle") {
    integral.erase(VarKey(VarKey::Kind::P));
    integral.erase(VarKey(VarKey::Kind::Q));
  }
  result = substitute(result, integral);

  std::optional<Rational> value;
  if (!fractional.empty()) {
    for (const auto& v : result.variables()) {
      if (!fractional.count(v)) {
        throw UsageError("non-integer --subst values need every variable bound; " + v.name() +
                         " is free");
      }
    }
    value = eval(result, fractional);
    if (value->get_den() == 1) {
      result = Poly(Integer(value->get_num()));
      value.reset();
    }
  }

  if (args.format == "json") {
    if (value) {
      std::cout << nlohmann::json{{"value", rational_string(*value)}}.dump() << '\n';
    } else {
      std::cout << to_json(result).dump() << '\n';
    }
  } else {
    std::cout << (value ? rational_string(*value) : canonical_string(result)) << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  std::string input;
  std::string suite;
  std::uint64_t seed = 7;
  std::optional<unsigned> max_n;
  std::optional<unsigned> max_m;
  std::size_t count = 200;
};

int cmd_verify(const VerifyArgs& args) {
  VerifyReport report;
  if (!args.input.empty()) {
    verify_instance(load(args.input), report, args.input);
  } else if (args.suite == "exhaustive") {
    report = verify_suite(exhaustive_suite(args.max_n.value_or(4), args.max_m.value_or(3)));
  } else if (args.suite == "random") {
    report = verify_suite(
        random_suite(args.seed, args.count, args.max_n.value_or(6), args.max_m.value_or(5)));
  } else if (args.suite == "families") {
    report = verify_families();
  } else {
    throw UsageError("verify needs --input FILE or --suite {exhaustive|random|families}");
  }
  std::cout << report.text();
  std::cout << (report.passed() ? "ALL PASS" : "FAILURES") << '\n';
  return report.passed() ? kOk : kVerifyFailed;
}

struct FamilyArgs {
  std::string family;
  unsigned m = 0;
  unsigned r = 2;
  unsigned n = 1;
  unsigned s = 1;
  std::optional<unsigned> ell;
  std::vector<unsigned> petals;
  std::string emit = "hypergraph";
  bool uniform_t = false;
  std::string format = "text";
};

int cmd_family(const FamilyArgs& args) {
  FamilySpec spec;
  if (args.family == "path") {
    spec = PathSpec{args.m, args.r};
  } else if (args.family == "cycle") {
    spec = CycleSpec{args.m, args.r};
  } else if (args.family == "hyperstar") {
    spec = HyperstarSpec{args.n, args.r};
  } else if (args.family == "sunflower") {
    if (args.ell && !args.petals.empty()) throw UsageError("give --ell or --petals, not both");
    if (args.ell) {
      spec = SunflowerSpec::uniform(args.r, *args.ell, args.s);
    } else {
      spec = SunflowerSpec{args.petals, args.s};
    }
  } else {
    throw UsageError("unknown --family " + args.family);
  }
  validate(spec);

  if (args.emit == "hypergraph") {
    std::cout << emit_hypergraph(make_family(spec)) << '\n';
    return kOk;
  }
  Poly result;
  if (const auto* p = std::get_if<PathSpec>(&spec)) {
    result = path_xi(p->m, p->r);
  } else if (const auto* c = std::get_if<CycleSpec>(&spec)) {
    result = cycle_xi(c->m, c->r);
  } else if (const auto* star = std::get_if<HyperstarSpec>(&spec)) {
    result = args.uniform_t ? hyperstar_chromatic_trivariate(star->n, star->r)
                            : hyperstar_chromatic(star->n, star->r);
  } else {
    const auto& flower = std::get<SunflowerSpec>(spec);
    if (args.uniform_t && args.ell) {
      result = sunflower_chromatic_uniform(args.r, *args.ell, args.s);
    } else {
      result = sunflower_chromatic(flower);
      if (args.uniform_t) result = collapse_t(result);
    }
  }
  if (args.format == "json") {
    std::cout << to_json(result).dump() << '\n';
  } else {
    std::cout << canonical_string(result) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph polynomials: elimination, chromatic and friends"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Compute a polynomial of a hypergraph file");
  c->add_option("--input", compute.input, "Hypergraph JSON document")->required();
  c->add_option("--poly", compute.poly, "Polynomial")
      ->check(CLI::IsMember({"xi", "chromatic", "coboundary", "matching", "covering",
                             "transversal", "section", "potts", "tutte"}));
  c->add_option("--algo", compute.algo, "Algorithm")
      ->check(CLI::IsMember(
          {"default", "subset", "recursive", "mobius", "sections", "bridge", "oracle"}));
  c->add_flag("--uniform-t", compute.uniform_t, "Replace every t{e} by t");
  c->add_option("--subst", compute.subst, "Bind a variable, e.g. q=3 or t{a}=-1/2");
  c->add_option("--max-colorings", compute.max_colorings,
                 "Coloring budget for --algo oracle (q^n)");
  c->add_option("--max-lattice-vertices", compute.max_lattice_vertices,
                 "Vertex budget for --algo mobius");
  c->add_option("--format", compute.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check the identities on a file or a suite");
  auto* input = v->add_option("--input", verify.input, "Hypergraph JSON document");
  v->add_option("--suite", verify.suite, "Suite")
      ->check(CLI::IsMember({"exhaustive", "random", "families"}))
      ->excludes(input);
  v->add_option("--seed", verify.seed, "Seed for the random suite");
  v->add_option("--count", verify.count, "Instances in the random suite");
  v->add_option("--max-n", verify.max_n, "Largest vertex count");
  v->add_option("--max-m", verify.max_m, "Largest edge count");

  FamilyArgs family;
  auto* f = app.add_subcommand("family", "Build a named family or its closed form");
  f->add_option("--family", family.family, "Family")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "hyperstar", "sunflower"}));
  f->add_option("-m", family.m, "Edges (path, cycle)");
  f->add_option("-r", family.r, "Edge size");
  f->add_option("-n", family.n, "Vertices (hyperstar)");
  f->add_option("-s", family.s, "Seeds (sunflower)");
  f->add_option("--ell", family.ell, "Petals of a uniform sunflower");
  f->add_option("--petals", family.petals, "Petal sizes, e.g. 2,2,1")->delimiter(',');
  f->add_option("--emit", family.emit, "Output")->check(CLI::IsMember({"hypergraph", "poly"}));
  f->add_flag("--uniform-t", family.uniform_t, "Closed form in a single t");
  f->add_option("--format", family.format, "Polynomial format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c) return cmd_compute(compute);
    if (*v) return cmd_verify(verify);
    return cmd_family(family);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const MalformedDocument& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kInvalid;
  } catch (const SchemaViolation& e) {
    std::cerr << "error: schema violation: " << e.what() << '\n';
    return kInvalid;
  } catch (const ValidationError& e) {
    std::cerr << "error: invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const InexactDivision& e) {
    std::cerr << "error: not a polynomial: " << e.what() << '\n';
    return kInvalid;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << '\n';
    return kBudget;
  }
}
