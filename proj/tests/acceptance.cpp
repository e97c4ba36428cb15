// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any
// failure.

#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "hypoly/bond_lattice.hpp"
#include "hypoly/chromatic.hpp"
#include "hypoly/elimination.hpp"
#include "hypoly/families.hpp"
#include "hypoly/specials.hpp"
#include "hypoly/suites.hpp"
#include "oracle.hpp"
#include "process.hpp"

using namespace hypoly;

namespace {

const VarKey X(VarKey::Kind::X);
const VarKey Y(VarKey::Kind::Y);
const VarKey Z(VarKey::Kind::Z);
const VarKey P(VarKey::Kind::P);
const VarKey Q(VarKey::Kind::Q);
const VarKey T(VarKey::Kind::T_UNIFORM);

// Collects the first few failure notes of one criterion.
class Check {
 public:
  void expect(bool ok, const std::string& note) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + note;
  }
  bool passed() const { return failures_ == 0 && checks_ > 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks";
    if (failures_) out << ", " << failures_ << " failed: " << notes_;
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string notes_;
};

struct Suites {
  std::vector<Hypergraph> exhaustive = exhaustive_suite(4, 3, 3);
  std::vector<Hypergraph> random = random_suite(20240601, 200, 6, 5);

  void each(const std::function<void(const Hypergraph&)>& f) const {
    for (const auto& h : exhaustive) f(h);
    for (const auto& h : random) f(h);
  }
};

Poly at(const Poly& a, unsigned p, unsigned q) {
  return substitute(a, {{P, Poly(static_cast<long>(p))}, {Q, Poly(static_cast<long>(q))}});
}

void criterion1(const Suites& s, Check& c) {
  c.expect(s.exhaustive.size() == 825, "exhaustive suite size " + std::to_string(s.exhaustive.size()));
  s.each([&](const Hypergraph& h) {
    const auto subset = xi_subset(h);
    c.expect(xi_recursive(h) == subset, describe(h));
    const auto g = oracle::from(h);
    c.expect(oracle::to_poly(g, oracle::xi(g)) == subset, "oracle " + describe(h));
  });
}

void criterion2(Check& c) {
  for (const auto& h : exhaustive_suite(4, 4, 3)) {
    const auto xi = xi_recursive(h);
    const auto chromatic = chromatic_recursive(h);
    auto order = h.edge_ids();
    do {
      RecursionOptions options;
      options.pivot_order = order;
      c.expect(xi_recursive(h, options) == xi, "xi " + describe(h));
      c.expect(chromatic_recursive(h, options) == chromatic, "P " + describe(h));
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

void criterion3(const Suites& s, Check& c) {
  s.each([&](const Hypergraph& h) {
    const auto reference = chromatic_poly(h);
    c.expect(chromatic_via_xi(h) == reference, "xi bridge " + describe(h));
    c.expect(chromatic_recursive(h) == reference, "recursion " + describe(h));
    c.expect(section_decomposition(h) == reference, "sections " + describe(h));
    c.expect(chromatic_via_mobius(h) == reference, "mobius " + describe(h));
    const auto g = oracle::from(h);
    for (unsigned q = 0; q <= 3; ++q) {
      for (unsigned p = 0; p <= q; ++p) {
        const auto value = at(reference, p, q);
        c.expect(value == chromatic_count(h, p, q), "count " + describe(h));
        c.expect(value == oracle::coloring_poly(g, p, q), "oracle count " + describe(h));
      }
    }
  });
}

void criterion4(const Suites& s, Check& c) {
  s.each([&](const Hypergraph& h) {
    c.expect(bridge(BridgeKind::Covering, h) == covering_poly(h), "covering " + describe(h));
    c.expect(bridge(BridgeKind::Matching, h) == matching_poly(h), "matching " + describe(h));
    c.expect(bridge(BridgeKind::Potts, h) == potts_poly(h), "potts " + describe(h));
    c.expect(bridge(BridgeKind::Section, h) == section_poly(h), "section " + describe(h));
    c.expect(bridge(BridgeKind::Coboundary, h) == coboundary_poly(h), "coboundary " + describe(h));
    c.expect(trivariate_chromatic_via_xi(h) == collapse_t(chromatic_poly(h)),
             "trivariate " + describe(h));
  });
  const auto k2 = fixtures::k2();
  const Poly shifted = Poly::t() - Poly(1);
  const auto printed = substitute(
      xi_classic(k2), {{X, Poly::q()}, {Y, shifted}, {Z, (Poly::q() - Poly::p()) * shifted}});
  c.expect(printed != collapse_t(chromatic_poly(k2)), "printed (q-p)(t-1) variant agrees on K2");
}

void criterion5(Check& c) {
  const auto k3 = fixtures::k3();
  auto expect_string = [&](const Poly& value, const std::string& expected, const std::string& what) {
    const auto got = canonical_string(value);
    c.expect(got == expected, what + " gave " + got);
  };
  expect_string(substitute(collapse_t(chromatic_poly(k3)), {{P, Poly::q()}, {T, Poly(0)}}),
                "q^3 - 3*q^2 + 2*q", "P(K3; q, q, 0)");
  expect_string(tutte_poly(k3), "x^2 + x + y", "tutte(K3)");
  expect_string(xi_subset(fixtures::k2()), "x^2 + x*y*t{a} + z*t{a}", "xi(K2)");
  expect_string(fixtures::with_t_one(covering_poly(k3)), "x^3*y + 3*x^2*y", "covering(K3)");
  expect_string(substitute(collapse_t(matching_poly(k3)), {{T, Poly::y()}}), "x^3 + 3*x*y",
                "matching(K3)");
}

void criterion6(const Suites& s, Check& c) {
  const auto lattice = connected_partitions(fixtures::path());
  c.expect(lattice.size() == 4, "|Pi(P)| = " + std::to_string(lattice.size()));
  c.expect(lattice.mobius(lattice.bottom(), lattice.top()) == 1, "mu(0, 1) on P");

  s.each([&](const Hypergraph& h) {
    if (h.num_vertices() > 6) return;
    const auto l = connected_partitions(h);
    for (unsigned q = 0; q <= 3; ++q) {
      for (unsigned p = 0; p <= q; ++p) {
        const auto counts = h_counts(h, l, p, q);
        for (std::size_t a = 0; a < l.size(); ++a) {
          const auto& pi = l.elements()[a];
          Integer sum = 0;
          for (std::size_t b = 0; b < l.size(); ++b) {
            if (l.leq(a, b)) sum += counts[b];
          }
          Integer expected = 1;
          for (std::size_t i = 0; i < pi.num_singletons(); ++i) expected *= q;
          for (std::size_t i = pi.num_singletons(); i < pi.num_blocks(); ++i) expected *= p;
          c.expect(sum == expected, describe(h) + " p=" + std::to_string(p) +
                                        " q=" + std::to_string(q));
        }
      }
    }
  });
}

void criterion7(Check& c) {
  for (unsigned r = 2; r <= 4; ++r) {
    for (unsigned m = 1; m <= 5; ++m) {
      c.expect(path_xi(m, r) == xi_classic(make_family(PathSpec{m, r})),
               "path m=" + std::to_string(m) + " r=" + std::to_string(r));
    }
    const auto series = path_gf_series(r, 6);
    for (unsigned m = 0; m <= 6; ++m) {
      c.expect(series[m] == path_xi(m, r), "gf order " + std::to_string(m));
    }
  }
  const auto naive = (Poly::x() + Poly::y()) * path_xi(1, 2) + Poly::z() * path_xi(0, 2);
  const auto repaired = path_xi(2, 2) - (Poly::x().pow(3) + Poly(2) * Poly::x().pow(2) * Poly::y() +
                                         Poly::x() * Poly::y().pow(2));
  const auto unrepaired = naive - (Poly::x().pow(3) + Poly(2) * Poly::x().pow(2) * Poly::y() +
                                   Poly::x() * Poly::y().pow(2));
  c.expect(canonical_string(repaired) == "2*x*z + y*z", "repaired m=2 tail");
  c.expect(canonical_string(unrepaired) == "x*z + y*z + z", "unrepaired m=2 tail");

  for (unsigned r = 2; r <= 3; ++r) {
    for (unsigned m = 0; m <= 8; ++m) {
      const auto value =
          substitute(path_xi(m, r), {{X, Poly(1)}, {Y, Poly::x() - Poly(1)}, {Z, Poly(1)}});
      c.expect(value == fibonacci_poly(m + 2), "fibonacci m=" + std::to_string(m));
    }
    for (unsigned m = 3; m <= 5; ++m) {
      c.expect(cycle_xi(m, r) == xi_classic(make_family(CycleSpec{m, r})),
               "cycle m=" + std::to_string(m) + " r=" + std::to_string(r));
    }
  }

  for (auto [n, r] : {std::pair{3U, 2U}, {4U, 2U}, {4U, 3U}, {5U, 3U}}) {
    const auto direct = chromatic_poly(make_family(HyperstarSpec{n, r}));
    c.expect(hyperstar_chromatic(n, r) == direct, "hyperstar n=" + std::to_string(n));
    c.expect(hyperstar_chromatic_trivariate(n, r) == collapse_t(direct),
             "hyperstar uniform n=" + std::to_string(n));
  }
  const Poly p = Poly::p();
  const Poly q = Poly::q();
  const Poly t = Poly::t();
  const Poly one(1);
  const auto star43 = q.pow(4) + Poly(3) * p * (t - one) * (q - one) + p * (t.pow(3) - one);
  c.expect(hyperstar_chromatic_trivariate(4, 3) == star43, "H_{4,3} display");
  const auto printed43 = q.pow(4) + Poly(3) * p * (t.pow(3) - one) * (q - one) + p * (t - one);
  c.expect(printed43 != collapse_t(chromatic_poly(make_family(HyperstarSpec{4, 3}))),
           "printed hyperstar exponent agrees");

  for (unsigned s = 1; s <= 2; ++s) {
    std::vector<unsigned> petals;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned smallest, unsigned room) {
      const SunflowerSpec spec{petals, s};
      c.expect(sunflower_chromatic(spec) == chromatic_poly(make_family(spec)), "sunflower");
      for (unsigned size = smallest; size <= room; ++size) {
        if (size == 0 && !petals.empty()) continue;
        petals.push_back(size);
        rec(std::max(size, 1U), room - size);
        petals.pop_back();
      }
    };
    rec(0, 8 - s);
    for (unsigned r = s; r <= 4; ++r) {
      for (unsigned ell = 1; ell <= 3; ++ell) {
        if ((r == s && ell > 1) || s + ell * (r - s) > 8) continue;
        c.expect(sunflower_chromatic_uniform(r, ell, s) ==
                     collapse_t(chromatic_poly(make_family(SunflowerSpec::uniform(r, ell, s)))),
                 "uniform sunflower");
      }
    }
  }
}

void criterion8(Check& c) {
  for (const auto& g : fixtures::graph_suite(4, 5)) {
    const auto t = tutte_poly(g);
    c.expect(t == oracle::tutte_poly(g), "classic recursion " + describe(g));
    if (g.num_edges() == 0) continue;
    const auto& e = g.edges().front();
    const auto deleted = delete_edge(g, e.id);
    if (e.members.size() == 1) {
      c.expect(t == Poly::y() * tutte_poly(deleted), "loop " + describe(g));
    } else if (num_components(deleted) > num_components(g)) {
      c.expect(t == Poly::x() * tutte_poly(contract(g, e.id)), "bridge " + describe(g));
    } else {
      c.expect(t == tutte_poly(deleted) + tutte_poly(contract(g, e.id)), "ordinary " + describe(g));
    }
  }
}

void criterion9(Check& c) {
  const std::string cli = process::quote(HYPOLY_CLI);
  const std::string data = std::string(HYPOLY_TEST_DATA) + "/";
  const std::pair<std::string, std::string> cases[] = {
      {"compute --input " + process::quote(data + "k2.json") + " --poly xi --algo subset",
       "x^2 + x*y*t{a} + z*t{a}\n"},
      {"compute --input " + process::quote(data + "k3.json") +
           " --poly chromatic --uniform-t --subst p=3 --subst q=3 --subst t=0",
       "6\n"},
      {"compute --input " + process::quote(data + "k3.json") + " --poly tutte", "x^2 + x + y\n"},
  };
  for (const auto& [args, expected] : cases) {
    const auto first = process::run(cli + " " + args);
    c.expect(first.exit_code == 0 && first.out == expected, args + " gave " + first.out);
    for (int i = 0; i < 2; ++i) {
      const auto again = process::run(cli + " " + args);
      c.expect(again.out == first.out && again.exit_code == first.exit_code, "rerun " + args);
    }
  }
  const auto verify = process::run(cli + " verify --suite exhaustive");
  c.expect(verify.exit_code == 0, "verify --suite exhaustive exit " + std::to_string(verify.exit_code));
}

}  // namespace

int main() {
  const Suites suites;
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"xi oracle equivalence", [&](Check& c) { criterion1(suites, c); }},
      {"edge-order independence", criterion2},
      {"chromatic four-way agreement", [&](Check& c) { criterion3(suites, c); }},
      {"substitution bridges and trivariate sign", [&](Check& c) { criterion4(suites, c); }},
      {"named values", criterion5},
      {"bond lattice", [&](Check& c) { criterion6(suites, c); }},
      {"families", criterion7},
      {"classic Tutte oracle", criterion8},
      {"CLI determinism", criterion9},
  };
  bool all = true;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Check check;
    try {
      run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.passed() ? "PASS" : "FAIL") << " criterion " << index++ << ": " << name
              << " (" << check.summary() << ")" << std::endl;
    all = all && check.passed();
  }
  return all ? 0 : 1;
}
