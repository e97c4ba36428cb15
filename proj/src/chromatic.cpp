#include "hypoly/chromatic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hypoly/errors.hpp"

namespace hypoly {

namespace {

constexpr std::size_t kMaxSubsetBits = 30;

bool is_primary(const Hypergraph::Edge& e, const Coloring& c) {
  const auto color = c.colors[e.members.front()];
  if (color > c.p) return false;
  return std::all_of(e.members.begin(), e.members.end(),
                     [&](auto v) { return c.colors[v] == color; });
}

Poly edge_weight(const EdgeId& e, bool uniform) { return uniform ? Poly::t() : Poly::t(e); }

class ChromaticRecursion {
 public:
  explicit ChromaticRecursion(const RecursionOptions& options) : options_(options) {}

  Poly run(const Hypergraph& h) {
    if (h.num_edges() == 0) return Poly::q().pow(static_cast<unsigned>(h.num_vertices()));
    auto parts = components(h);
    if (parts.size() > 1) {
      Poly product(1);
      for (const auto& part : parts) product *= run(part);
      return product;
    }
    EdgeId pivot = h.edges().front().id;
    if (options_.pivot_order) {
      auto it = std::find_if(options_.pivot_order->begin(), options_.pivot_order->end(),
                             [&](const EdgeId& e) { return h.has_edge(e); });
      if (it == options_.pivot_order->end()) throw std::logic_error("pivot order exhausted");
      pivot = *it;
    }
    const Poly shifted = edge_weight(pivot, options_.uniform_t) - Poly(1);
    Poly result = run(delete_edge(h, pivot));
    result += shifted * run(contract(h, pivot));
    result -= shifted * (Poly::q() - Poly::p()) * run(extract(h, pivot));
    return result;
  }

 private:
  const RecursionOptions& options_;
};

}  // namespace

EdgeSet primary_edges(const Hypergraph& h, const Coloring& c) {
  EdgeSet out;
  for (const auto& e : h.edges()) {
    if (is_primary(e, c)) out.insert(e.id);
  }
  return out;
}

void for_each_coloring(const Hypergraph& h, unsigned p, unsigned q,
                       const std::function<void(const Coloring&)>& visit, std::uint64_t budget) {
  if (p > q) throw ValidationError("primary color count p exceeds q");
  const auto n = h.num_vertices();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (q != 0 && total > budget / q) {
      throw BudgetExceeded("coloring enumeration q^n exceeds budget of " + std::to_string(budget));
    }
    total *= q;
  }
  if (total > budget) {
    throw BudgetExceeded("coloring enumeration q^n exceeds budget of " + std::to_string(budget));
  }
  if (total == 0) return;

  Coloring c{std::vector<unsigned>(n, 1), p, q};
  while (true) {
    visit(c);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (c.colors[i] < q) {
        ++c.colors[i];
        break;
      }
      c.colors[i] = 1;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

Poly chromatic_count(const Hypergraph& h, unsigned p, unsigned q, std::uint64_t budget) {
  std::map<std::vector<std::size_t>, Integer> tally;
  for_each_coloring(
      h, p, q,
      [&](const Coloring& c) {
        std::vector<std::size_t> primary;
        for (std::size_t i = 0; i < h.num_edges(); ++i) {
          if (is_primary(h.edges()[i], c)) primary.push_back(i);
        }
        ++tally[primary];
      },
      budget);
  Poly out;
  for (const auto& [primary, count] : tally) {
    std::vector<Monomial::Factor> factors;
    for (auto i : primary) factors.emplace_back(VarKey::edge(h.edges()[i].id), 1U);
    out += Poly(Monomial(std::move(factors)), count);
  }
  return out;
}

Poly chromatic_poly(const Hypergraph& h) {
  const auto m = h.num_edges();
  const auto n = h.num_vertices();
  if (m > kMaxSubsetBits) throw BudgetExceeded("edge-subset expansion needs m <= 30");
  Poly out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    EdgeSet chosen;
    Poly weight(1);
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1U) {
        chosen.insert(h.edges()[i].id);
        weight *= Poly::t(h.edges()[i].id) - Poly(1);
      }
    }
    auto section = edge_section(h, chosen);
    const auto blocks = static_cast<unsigned>(num_components(section));
    const auto free = static_cast<unsigned>(n - section.num_vertices());
    out += weight * Poly::p().pow(blocks) * Poly::q().pow(free);
  }
  return out;
}

Poly chromatic_via_xi(const Hypergraph& h) {
  std::map<VarKey, Poly> bindings{
      {VarKey(VarKey::Kind::X), Poly::q()},
      {VarKey(VarKey::Kind::Y), Poly(1)},
      {VarKey(VarKey::Kind::Z), Poly::p() - Poly::q()},
  };
  for (const auto& e : h.edges()) bindings.emplace(VarKey::edge(e.id), Poly::t(e.id) - Poly(1));
  return substitute(xi_subset(h), bindings);
}

Poly chromatic_recursive(const Hypergraph& h, const RecursionOptions& options) {
  if (options.pivot_order) {
    std::vector<EdgeId> sorted = *options.pivot_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != h.edge_ids()) {
      throw ValidationError("pivot order must be a permutation of the edge ids");
    }
  }
  ChromaticRecursion recursion(options);
  return recursion.run(h);
}

Poly coboundary(const Hypergraph& h) {
  return substitute(chromatic_poly(h), {{VarKey(VarKey::Kind::Q), Poly::p()}});
}

Poly section_decomposition(const Hypergraph& h) {
  const auto n = h.num_vertices();
  if (n > kMaxSubsetBits) throw BudgetExceeded("vertex-subset expansion needs n <= 30");
  const Poly gap = Poly::q() - Poly::p();
  Poly out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) s.insert(h.vertices()[i]);
    }
    out += coboundary(vertex_section(h, s)) * gap.pow(static_cast<unsigned>(n - s.size()));
  }
  return out;
}

Poly trivariate_chromatic_via_xi(const Hypergraph& h) {
  const Poly shifted = Poly::t() - Poly(1);
  return substitute(xi_classic(h), {
                                       {VarKey(VarKey::Kind::X), Poly::q()},
                                       {VarKey(VarKey::Kind::Y), shifted},
                                       {VarKey(VarKey::Kind::Z), (Poly::p() - Poly::q()) * shifted},
                                   });
}

}  // namespace hypoly
