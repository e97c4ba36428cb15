#include "hypoly/specials.hpp"

#include <map>

#include "hypoly/chromatic.hpp"
#include "hypoly/elimination.hpp"
#include "hypoly/errors.hpp"

namespace hypoly {

namespace {

constexpr std::size_t kMaxSubsetBits = 30;

void require_bits(std::size_t count, const char* what) {
  if (count > kMaxSubsetBits) {
    throw BudgetExceeded(std::string(what) + " enumeration needs at most 30 elements");
  }
}

std::vector<std::uint64_t> edge_masks(const Hypergraph& h) {
  std::vector<std::uint64_t> masks;
  masks.reserve(h.num_edges());
  for (const auto& e : h.edges()) masks.push_back(h.member_mask(e));
  return masks;
}

Poly edge_product(const Hypergraph& h, std::uint64_t subset) {
  std::vector<Monomial::Factor> factors;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (subset >> i & 1U) factors.emplace_back(VarKey::edge(h.edges()[i].id), 1U);
  }
  return Poly(Monomial(std::move(factors)), Integer(1));
}

EdgeSet edge_set(const Hypergraph& h, std::uint64_t subset) {
  EdgeSet out;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    if (subset >> i & 1U) out.insert(h.edges()[i].id);
  }
  return out;
}

}  // namespace

Poly matching_poly(const Hypergraph& h) {
  require_bits(h.num_edges(), "matching");
  const auto masks = edge_masks(h);
  const auto n = h.num_vertices();
  Poly out;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << masks.size()); ++subset) {
    std::uint64_t covered = 0;
    std::size_t weight = 0;
    bool disjoint = true;
    for (std::size_t i = 0; i < masks.size() && disjoint; ++i) {
      if (!(subset >> i & 1U)) continue;
      disjoint = (covered & masks[i]) == 0;
      covered |= masks[i];
      weight += h.edges()[i].members.size();
    }
    if (!disjoint) continue;
    out += Poly::x().pow(static_cast<unsigned>(n - weight)) * edge_product(h, subset);
  }
  return out;
}

Poly covering_poly(const Hypergraph& h) {
  require_bits(h.num_edges(), "covering");
  const auto masks = edge_masks(h);
  const auto n = h.num_vertices();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  Poly out;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << masks.size()); ++subset) {
    std::uint64_t covered = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if (subset >> i & 1U) covered |= masks[i];
    }
    if (covered != all) continue;
    const auto chosen = edge_set(h, subset);
    const auto k = static_cast<unsigned>(num_components(partial(h, chosen)));
    out += Poly::x().pow(static_cast<unsigned>(chosen.size())) * Poly::y().pow(k) *
           edge_product(h, subset);
  }
  return out;
}

Poly transversal_poly(const Hypergraph& h) {
  require_bits(h.num_vertices(), "transversal");
  const auto masks = edge_masks(h);
  Poly out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << h.num_vertices()); ++s) {
    bool hits_all = true;
    for (auto m : masks) hits_all = hits_all && (m & s) != 0;
    if (hits_all) out += Poly::x().pow(static_cast<unsigned>(__builtin_popcountll(s)));
  }
  return out;
}

Poly section_poly(const Hypergraph& h) {
  require_bits(h.num_vertices(), "section");
  const auto masks = edge_masks(h);
  const auto n = h.num_vertices();
  Poly out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::uint64_t inside = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if ((masks[i] & ~s) == 0) inside |= std::uint64_t{1} << i;
    }
    const auto size = static_cast<std::size_t>(__builtin_popcountll(s));
    out += Poly::x().pow(static_cast<unsigned>(n - size)) * edge_product(h, inside);
  }
  return out;
}

Poly potts_poly(const Hypergraph& h) {
  require_bits(h.num_edges(), "potts");
  Poly out;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << h.num_edges()); ++subset) {
    const auto k = static_cast<unsigned>(num_components(partial(h, edge_set(h, subset))));
    out += Poly::x().pow(k) * edge_product(h, subset);
  }
  return out;
}

Poly coboundary_poly(const Hypergraph& h) {
  require_bits(h.num_edges(), "coboundary");
  std::map<VarKey, Poly> shift;
  for (const auto& e : h.edges()) shift.emplace(VarKey::edge(e.id), Poly::t(e.id) - Poly(1));
  Poly out;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << h.num_edges()); ++subset) {
    const auto k = static_cast<unsigned>(num_components(partial(h, edge_set(h, subset))));
    out += Poly::p().pow(k) * edge_product(h, subset);
  }
  return substitute(out, shift);
}

Poly tutte_poly(const Hypergraph& h) {
  const Poly xm = Poly::x() - Poly(1);
  const Poly ym = Poly::y() - Poly(1);
  std::map<VarKey, Poly> bindings{{VarKey(VarKey::Kind::X), xm * ym}};
  for (const auto& e : h.edges()) bindings.emplace(VarKey::edge(e.id), ym);
  const Poly z = substitute(potts_poly(h), bindings);
  const Poly divisor = xm.pow(static_cast<unsigned>(num_components(h))) *
                       ym.pow(static_cast<unsigned>(h.num_vertices()));
  return divide_exact(z, divisor);
}

std::string to_string(BridgeKind kind) {
  switch (kind) {
    case BridgeKind::Covering: return "covering";
    case BridgeKind::Matching: return "matching";
    case BridgeKind::Potts: return "potts";
    case BridgeKind::Chromatic: return "chromatic";
    case BridgeKind::Section: return "section";
    case BridgeKind::Coboundary: return "coboundary";
  }
  return "?";
}

std::optional<BridgeKind> parse_bridge_kind(const std::string& name) {
  for (auto kind : {BridgeKind::Covering, BridgeKind::Matching, BridgeKind::Potts,
                    BridgeKind::Chromatic, BridgeKind::Section, BridgeKind::Coboundary}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

Poly bridge(BridgeKind kind, const Hypergraph& h) {
  const VarKey x(VarKey::Kind::X);
  const VarKey y(VarKey::Kind::Y);
  const VarKey z(VarKey::Kind::Z);
  const VarKey p(VarKey::Kind::P);
  const VarKey q(VarKey::Kind::Q);
  switch (kind) {
    case BridgeKind::Covering:
      return substitute(xi_subset(h), {{x, Poly(0)}, {y, Poly::x()}, {z, Poly::x() * Poly::y()}});
    case BridgeKind::Matching:
      return substitute(xi_subset(h), {{y, Poly(0)}, {z, Poly(1)}});
    case BridgeKind::Potts:
      return substitute(xi_subset(h), {{y, Poly(1)}, {z, Poly(0)}});
    case BridgeKind::Chromatic:
      return chromatic_via_xi(h);
    case BridgeKind::Section:
      return substitute(chromatic_poly(h), {{p, Poly(1)}, {q, Poly::x() + Poly(1)}});
    case BridgeKind::Coboundary:
      return substitute(chromatic_poly(h), {{q, Poly::p()}});
  }
  throw std::invalid_argument("unknown bridge kind");
}

}  // namespace hypoly
