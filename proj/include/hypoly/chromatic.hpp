#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hypoly/elimination.hpp"
#include "hypoly/hypergraph.hpp"
#include "hypoly/poly.hpp"

namespace hypoly {

/// Default guard on q^n for coloring enumeration.
inline constexpr std::uint64_t kColoringBudget = 10'000'000;

/// Total map from vertices (indexed like Hypergraph::vertices()) to colors
/// 1..q, where colors 1..p are primary.
struct Coloring {
  std::vector<unsigned> colors;
  unsigned p = 0;
  unsigned q = 0;
};

/// Edges monochromatic in a primary color.
EdgeSet primary_edges(const Hypergraph& h, const Coloring& c);

/// Calls visit for each of the q^n colorings, in lexicographic order with the
/// first vertex most significant. Throws BudgetExceeded above `budget` and
/// ValidationError when p > q.
void for_each_coloring(const Hypergraph& h, unsigned p, unsigned q,
                       const std::function<void(const Coloring&)>& visit,
                       std::uint64_t budget = kColoringBudget);

/// Sum over all colorings of the product of t{e} over primary edges.
Poly chromatic_count(const Hypergraph& h, unsigned p, unsigned q,
                     std::uint64_t budget = kColoringBudget);

/// Edge-subset expansion: sum over F of prod (t_e - 1) p^c(F) q^(n - |V(F)|).
Poly chromatic_poly(const Hypergraph& h);

/// xi(H; q, 1, p - q, t - 1).
Poly chromatic_via_xi(const Hypergraph& h);

/// P(H) = P(H-e) + (t_e - 1) P(H/e) + (1 - t_e)(q - p) P(H extract e), with
/// P(no edges) = q^n and factorization over components.
Poly chromatic_recursive(const Hypergraph& h, const RecursionOptions& options = {});

/// Sum over vertex subsets S of coboundary(H x S) (q - p)^(n - |S|).
Poly section_decomposition(const Hypergraph& h);

/// chromatic_poly with q replaced by p.
Poly coboundary(const Hypergraph& h);

/// Trivariate chromatic polynomial from the t-free xi:
/// xi(H; q, t - 1, (p - q)(t - 1)).
Poly trivariate_chromatic_via_xi(const Hypergraph& h);

}  // namespace hypoly
