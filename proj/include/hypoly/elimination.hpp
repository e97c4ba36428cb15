#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypoly/hypergraph.hpp"
#include "hypoly/poly.hpp"

namespace hypoly {

/// Controls the deletion-contraction-extraction recursions.
struct RecursionOptions {
  /// Pivot on the first surviving edge of this list. Defaults to the
  /// smallest EdgeId. Must be a permutation of the edge ids when set.
  std::optional<std::vector<EdgeId>> pivot_order;
  /// Replace every t{e} by the uniform t. Enables memoization on a canonical
  /// labeled encoding of connected subproblems.
  bool uniform_t = false;
};

/// Weights of the generic elimination recurrence
///   f(H) = beta f(H-e) + gamma f(H/e) + delta f(H extract e),
/// f(empty) = 1, f(single vertex) = alpha, multiplicative over components.
struct EliminationWeights {
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational delta;
};

/// xi(H; x, y, z, t) summed over vertex-disjoint pairs (I, J).
Poly xi_subset(const Hypergraph& h);

/// xi via xi(H) = xi(H-e) + y t_e xi(H/e) + z t_e xi(H extract e), with base
/// cases xi(no edges) = x^n and factorization over connected components.
Poly xi_recursive(const Hypergraph& h, const RecursionOptions& options = {});

/// The t-free polynomial xi(H; x, y, z).
Poly xi_classic(const Hypergraph& h);

/// Runs the weighted recurrence in the given pivot order.
Rational generic_elimination(const Hypergraph& h, const EliminationWeights& w,
                             const std::vector<EdgeId>& order);

/// Labeled encoding of a hypergraph, stable under vertex relabeling that
/// preserves breadth-first discovery order from the smallest label in each
/// component. Edge ids are dropped.
std::string canonical_encoding(const Hypergraph& h);

}  // namespace hypoly
