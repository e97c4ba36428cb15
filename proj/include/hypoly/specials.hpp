#pragma once

#include <optional>
#include <string>

#include "hypoly/hypergraph.hpp"
#include "hypoly/poly.hpp"

namespace hypoly {

// Direct enumerators. Per-edge activity variables (y_e for matchings and
// sections, t_e elsewhere) are all realized as t{e}.

/// sum over matchings M of x^(n - sum_{e in M} |e|) prod t{e}.
Poly matching_poly(const Hypergraph& h);

/// sum over edge coverings C of x^|C| y^k(H_C) prod t{e}; zero when some
/// vertex is exposed.
Poly covering_poly(const Hypergraph& h);

/// sum over transversals S of x^|S|.
Poly transversal_poly(const Hypergraph& h);

/// sum over vertex subsets S of x^(n - |S|) prod_{e inside S} t{e}.
Poly section_poly(const Hypergraph& h);

/// sum over edge subsets J of x^k(H_J) prod t{e}.
Poly potts_poly(const Hypergraph& h);

/// Coboundary polynomial from its own subset expansion:
/// sum over edge subsets J of p^k(H_J) prod (t{e} - 1).
Poly coboundary_poly(const Hypergraph& h);

/// Tutte polynomial of a graph through the Potts form:
/// (x-1)^-k(H) (y-1)^-n Z(H; (x-1)(y-1), y-1). Throws InexactDivision when
/// the quotient is not a polynomial, which happens for edges of size >= 3.
Poly tutte_poly(const Hypergraph& h);

enum class BridgeKind { Covering, Matching, Potts, Chromatic, Section, Coboundary };

std::string to_string(BridgeKind kind);
std::optional<BridgeKind> parse_bridge_kind(const std::string& name);

/// The named polynomial obtained purely by substitution into xi_subset (or
/// chromatic_poly for section and coboundary), in the alphabet of the direct
/// enumerator:
///   covering   xi(0, x, x*y, t)       matching  xi(x, 0, 1, t)
///   potts      xi(x, 1, 0, t)         chromatic xi(q, 1, p - q, t - 1)
///   section    P(1, x + 1, t)         coboundary P(p, p, t)
Poly bridge(BridgeKind kind, const Hypergraph& h);

}  // namespace hypoly
