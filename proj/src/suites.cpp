#include "hypoly/suites.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "hypoly/bond_lattice.hpp"
#include "hypoly/chromatic.hpp"
#include "hypoly/elimination.hpp"
#include "hypoly/families.hpp"
#include "hypoly/specials.hpp"

namespace hypoly {

namespace {

std::string vertex_label(unsigned i) { return std::to_string(i); }

std::string edge_label(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "e" + std::to_string(i);
}

// Non-empty subsets of {0..n-1} with at most max_size elements, ordered by
// size and then lexicographically.
std::vector<std::vector<unsigned>> small_subsets(unsigned n, unsigned max_size) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> chosen;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned next, unsigned size) {
    if (chosen.size() == size) {
      out.push_back(chosen);
      return;
    }
    for (unsigned v = next; v < n; ++v) {
      chosen.push_back(v);
      rec(v + 1, size);
      chosen.pop_back();
    }
  };
  for (unsigned size = 1; size <= std::min(n, max_size); ++size) rec(0, size);
  return out;
}

Hypergraph assemble(unsigned n, const std::vector<std::vector<unsigned>>& edges) {
  std::vector<std::string> vertices;
  for (unsigned i = 1; i <= n; ++i) vertices.push_back(vertex_label(i));
  std::vector<std::pair<std::string, std::vector<std::string>>> specs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<std::string> members;
    for (auto v : edges[i]) members.push_back(vertex_label(v + 1));
    specs.emplace_back(edge_label(i), std::move(members));
  }
  return make_hypergraph(vertices, specs);
}

// Uniform draw in [0, bound) that does not depend on the standard library's
// distribution implementations.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t value = 0;
  do {
    value = rng();
  } while (value >= limit);
  return value % bound;
}

VarKey key(VarKey::Kind kind) { return VarKey(kind); }

bool is_graph(const Hypergraph& h) {
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [](const auto& e) { return e.members.size() <= 2; });
}

// T(G) through the classic deletion-contraction recurrence, using tutte_poly
// only on the smaller minors.
bool tutte_recurrence_holds(const Hypergraph& h) {
  if (h.num_edges() == 0) return tutte_poly(h) == Poly(1);
  const auto& e = h.edges().front();
  const auto whole = tutte_poly(h);
  if (e.members.size() == 1) return whole == Poly::y() * tutte_poly(delete_edge(h, e.id));
  const auto deleted = delete_edge(h, e.id);
  if (num_components(deleted) > num_components(h)) {
    return whole == Poly::x() * tutte_poly(contract(h, e.id));
  }
  return whole == tutte_poly(deleted) + tutte_poly(contract(h, e.id));
}

// xi(H; x, y, z, t) = P(H; x + z/y, x, y t + 1) at a rational point.
bool xi_matches_chromatic(const Hypergraph& h, const Poly& xi, const Poly& chromatic,
                          std::size_t salt) {
  const Rational x(2 + static_cast<long>(salt % 3), 3);
  const Rational y(-3, 2 + static_cast<long>(salt % 5));
  const Rational z(5, 7);
  std::map<VarKey, Rational> xi_point{{key(VarKey::Kind::X), x},
                                      {key(VarKey::Kind::Y), y},
                                      {key(VarKey::Kind::Z), z}};
  std::map<VarKey, Rational> chromatic_point{{key(VarKey::Kind::P), x + z / y},
                                             {key(VarKey::Kind::Q), x}};
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    const Rational t(static_cast<long>(i + salt) % 4 - 1, 1 + static_cast<long>(i % 3));
    xi_point.emplace(VarKey::edge(h.edges()[i].id), t);
    chromatic_point.emplace(VarKey::edge(h.edges()[i].id), y * t + 1);
  }
  return eval(xi, xi_point) == eval(chromatic, chromatic_point);
}

bool inversion_holds(const Hypergraph& h) {
  const auto lattice = connected_partitions(h);
  for (unsigned q = 0; q <= 3; ++q) {
    for (unsigned p = 0; p <= q; ++p) {
      const auto counts = h_counts(h, lattice, p, q);
      for (std::size_t a = 0; a < lattice.size(); ++a) {
        const auto& pi = lattice.elements()[a];
        Integer sum = 0;
        for (std::size_t b = a; b < lattice.size(); ++b) {
          if (lattice.leq(a, b)) sum += counts[b];
        }
        const auto k1 = static_cast<unsigned long>(pi.num_singletons());
        Integer expected;
        Integer qk;
        mpz_ui_pow_ui(expected.get_mpz_t(), p, pi.num_blocks() - k1);
        mpz_ui_pow_ui(qk.get_mpz_t(), q, k1);
        if (sum != expected * qk) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<Hypergraph> exhaustive_suite(unsigned max_n, unsigned max_m, unsigned max_edge) {
  std::vector<Hypergraph> out;
  for (unsigned n = 0; n <= max_n; ++n) {
    const auto subsets = small_subsets(n, max_edge);
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      std::vector<std::vector<unsigned>> edges;
      for (auto i : pick) edges.push_back(subsets[i]);
      out.push_back(assemble(n, edges));
      if (pick.size() == max_m) return;
      for (std::size_t i = from; i < subsets.size(); ++i) {
        pick.push_back(i);
        rec(i);
        pick.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

std::vector<Hypergraph> random_suite(std::uint64_t seed, std::size_t count, unsigned max_n,
                                     unsigned max_m) {
  std::mt19937_64 rng(seed);
  std::vector<Hypergraph> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto n = static_cast<unsigned>(1 + draw(rng, max_n));
    const auto m = static_cast<unsigned>(draw(rng, max_m + 1));
    std::vector<std::vector<unsigned>> edges;
    for (unsigned i = 0; i < m; ++i) {
      const auto size = static_cast<unsigned>(1 + draw(rng, std::min(n, 4U)));
      std::vector<unsigned> pool(n);
      for (unsigned v = 0; v < n; ++v) pool[v] = v;
      for (unsigned j = 0; j < size; ++j) {
        const auto pick = j + static_cast<unsigned>(draw(rng, n - j));
        std::swap(pool[j], pool[pick]);
      }
      pool.resize(size);
      std::sort(pool.begin(), pool.end());
      edges.push_back(std::move(pool));
    }
    out.push_back(assemble(n, edges));
  }
  return out;
}

void VerifyReport::record(const std::string& name, bool ok, const std::string& context) {
  auto it = std::find_if(results_.begin(), results_.end(),
                         [&](const IdentityResult& r) { return r.name == name; });
  if (it == results_.end()) {
    results_.push_back(IdentityResult{name, 0, 0, {}});
    it = results_.end() - 1;
  }
  ++it->checked;
  if (!ok) {
    if (it->failed == 0) it->first_failure = context;
    ++it->failed;
  }
}

void VerifyReport::merge(const VerifyReport& other) {
  for (const auto& r : other.results_) {
    auto it = std::find_if(results_.begin(), results_.end(),
                           [&](const IdentityResult& mine) { return mine.name == r.name; });
    if (it == results_.end()) {
      results_.push_back(r);
      continue;
    }
    if (it->failed == 0) it->first_failure = r.first_failure;
    it->checked += r.checked;
    it->failed += r.failed;
  }
}

bool VerifyReport::passed() const {
  return std::all_of(results_.begin(), results_.end(),
                     [](const IdentityResult& r) { return r.passed(); });
}

std::string VerifyReport::text() const {
  std::ostringstream out;
  for (const auto& r : results_) {
    if (r.passed()) {
      out << "PASS " << r.name << " (" << r.checked << " checks)\n";
    } else {
      out << "FAIL " << r.name << " (" << r.failed << " of " << r.checked << " failed";
      if (!r.first_failure.empty()) out << "; first: " << r.first_failure;
      out << ")\n";
    }
  }
  return out.str();
}

std::string describe(const Hypergraph& h) {
  std::string out = "{";
  for (std::size_t i = 0; i < h.num_vertices(); ++i) {
    if (i) out += ',';
    out += h.vertices()[i].str();
  }
  out += " |";
  for (const auto& e : h.edges()) {
    out += ' ' + e.id.str() + ':';
    for (std::size_t i = 0; i < e.members.size(); ++i) {
      if (i) out += ',';
      out += h.vertices()[e.members[i]].str();
    }
  }
  return out + '}';
}

void verify_instance(const Hypergraph& h, VerifyReport& report, const std::string& context) {
  const auto where = context.empty() ? describe(h) : context + " " + describe(h);

  const auto xi = xi_subset(h);
  report.record("xi: subset expansion = recursion", xi == xi_recursive(h), where);
  if (h.num_edges() > 1) {
    auto reversed = h.edge_ids();
    std::reverse(reversed.begin(), reversed.end());
    RecursionOptions options;
    options.pivot_order = reversed;
    report.record("xi: reversed pivot order", xi == xi_recursive(h, options), where);
    report.record("chromatic: reversed pivot order",
                  chromatic_poly(h) == chromatic_recursive(h, options), where);
  }
  RecursionOptions uniform;
  uniform.uniform_t = true;
  report.record("xi: memoized uniform-t recursion", collapse_t(xi) == xi_recursive(h, uniform),
                where);

  const auto chromatic = chromatic_poly(h);
  report.record("chromatic: edge subsets = xi substitution", chromatic == chromatic_via_xi(h),
                where);
  report.record("chromatic: edge subsets = recursion", chromatic == chromatic_recursive(h), where);
  report.record("chromatic: edge subsets = section decomposition",
                chromatic == section_decomposition(h), where);
  if (h.num_vertices() <= kLatticeMaxVertices) {
    report.record("chromatic: edge subsets = Mobius inversion",
                  chromatic == chromatic_via_mobius(h), where);
  }
  if (h.num_vertices() <= 8) {
    bool counts_match = true;
    for (unsigned q = 0; q <= 3 && counts_match; ++q) {
      for (unsigned p = 0; p <= q && counts_match; ++p) {
        const auto value = substitute(chromatic, {{key(VarKey::Kind::P), Poly(static_cast<long>(p))},
                                                  {key(VarKey::Kind::Q), Poly(static_cast<long>(q))}});
        counts_match = value == chromatic_count(h, p, q);
      }
    }
    report.record("chromatic: values = coloring counts", counts_match, where);
  }
  report.record("chromatic: trivariate xi substitution",
                collapse_t(chromatic) == trivariate_chromatic_via_xi(h), where);
  report.record("xi = P(x + z/y, x, y t + 1) at rational points",
                xi_matches_chromatic(h, xi, chromatic, h.num_vertices() + h.num_edges()), where);

  report.record("bridge: covering", bridge(BridgeKind::Covering, h) == covering_poly(h), where);
  report.record("bridge: matching", bridge(BridgeKind::Matching, h) == matching_poly(h), where);
  report.record("bridge: potts", bridge(BridgeKind::Potts, h) == potts_poly(h), where);
  report.record("bridge: section", bridge(BridgeKind::Section, h) == section_poly(h), where);
  report.record("bridge: coboundary", bridge(BridgeKind::Coboundary, h) == coboundary_poly(h),
                where);

  std::map<VarKey, Poly> kill_t;
  for (const auto& e : h.edges()) kill_t.emplace(VarKey::edge(e.id), Poly(0));
  report.record("transversal = section at t = 0",
                substitute(section_poly(h), kill_t) == transversal_poly(h), where);

  if (h.num_vertices() <= 6) {
    report.record("bond lattice: inversion identity", inversion_holds(h), where);
  }
  if (is_graph(h) && h.num_edges() <= 8) {
    report.record("tutte: deletion-contraction", tutte_recurrence_holds(h), where);
  }
}

VerifyReport verify_suite(const std::vector<Hypergraph>& suite) {
  VerifyReport report;
  for (std::size_t i = 0; i < suite.size(); ++i) {
    verify_instance(suite[i], report, "#" + std::to_string(i));
  }
  return report;
}

VerifyReport verify_families() {
  VerifyReport report;
  const VarKey x = key(VarKey::Kind::X);
  const VarKey y = key(VarKey::Kind::Y);
  const VarKey z = key(VarKey::Kind::Z);

  for (unsigned r = 2; r <= 4; ++r) {
    // P_0 = 1 is the recurrence convention; the one-vertex path has xi = x.
    for (unsigned m = 1; m <= 5; ++m) {
      const auto where = "m=" + std::to_string(m) + " r=" + std::to_string(r);
      report.record("path: closed form = direct",
                    path_xi(m, r) == xi_classic(make_family(PathSpec{m, r})), where);
    }
    const auto series = path_gf_series(r, 6);
    for (unsigned m = 0; m <= 6; ++m) {
      report.record("path: generating function", series[m] == path_xi(m, r),
                    "order " + std::to_string(m) + " r=" + std::to_string(r));
    }
  }
  for (unsigned r = 2; r <= 3; ++r) {
    for (unsigned m = 0; m <= 8; ++m) {
      const auto value =
          substitute(path_xi(m, r), {{x, Poly(1)}, {y, Poly::x() - Poly(1)}, {z, Poly(1)}});
      report.record("path: Fibonacci specialization", value == fibonacci_poly(m + 2),
                    "m=" + std::to_string(m) + " r=" + std::to_string(r));
    }
    for (unsigned m = 3; m <= 5; ++m) {
      report.record("cycle: closed form = direct",
                    cycle_xi(m, r) == xi_classic(make_family(CycleSpec{m, r})),
                    "m=" + std::to_string(m) + " r=" + std::to_string(r));
    }
  }

  const std::pair<unsigned, unsigned> stars[] = {{2, 2}, {3, 2}, {4, 2}, {4, 3}, {5, 3}, {3, 1}};
  for (const auto& [n, r] : stars) {
    const auto where = "n=" + std::to_string(n) + " r=" + std::to_string(r);
    const auto direct = chromatic_poly(make_family(HyperstarSpec{n, r}));
    report.record("hyperstar: closed form = direct", hyperstar_chromatic(n, r) == direct, where);
    report.record("hyperstar: uniform-t closed form",
                  hyperstar_chromatic_trivariate(n, r) == collapse_t(direct), where);
  }

  // Petal lists as nondecreasing sequences, at most one empty petal.
  for (unsigned s = 1; s <= 2; ++s) {
    std::vector<unsigned> petals;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned smallest, unsigned budget) {
      const SunflowerSpec spec{petals, s};
      const auto where = "s=" + std::to_string(s) + " petals=" + std::to_string(petals.size());
      report.record("sunflower: closed form = direct",
                    sunflower_chromatic(spec) == chromatic_poly(make_family(spec)), where);
      for (unsigned size = smallest; size <= budget; ++size) {
        if (size == 0 && !petals.empty()) continue;
        petals.push_back(size);
        rec(std::max(size, 1U), budget - size);
        petals.pop_back();
      }
    };
    rec(0, 8 - s);
  }
  for (unsigned s = 1; s <= 2; ++s) {
    for (unsigned r = s; r <= 4; ++r) {
      for (unsigned ell = 1; ell <= 3; ++ell) {
        if (r == s && ell > 1) continue;
        if (s + ell * (r - s) > 8) continue;
        const auto direct = chromatic_poly(make_family(SunflowerSpec::uniform(r, ell, s)));
        report.record("sunflower: uniform display", sunflower_chromatic_uniform(r, ell, s) ==
                                                        collapse_t(direct),
                      "r=" + std::to_string(r) + " l=" + std::to_string(ell) +
                          " s=" + std::to_string(s));
      }
    }
  }
  return report;
}

}  // namespace hypoly
