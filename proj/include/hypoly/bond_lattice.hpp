#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "hypoly/chromatic.hpp"
#include "hypoly/hypergraph.hpp"
#include "hypoly/poly.hpp"

namespace hypoly {

/// Default guard on the vertex count for lattice construction.
inline constexpr std::size_t kLatticeMaxVertices = 10;

/// Set partition of the vertex indices. block_of[v] numbers blocks in order of
/// first appearance, so equal partitions have equal vectors.
class ConnectedPartition {
 public:
  ConnectedPartition() = default;
  explicit ConnectedPartition(std::vector<std::size_t> block_of);

  const std::vector<std::size_t>& block_of() const { return block_of_; }
  std::size_t num_blocks() const { return num_blocks_; }
  /// Number of singleton blocks.
  std::size_t num_singletons() const;
  std::vector<std::vector<std::size_t>> blocks() const;
  bool is_singleton(std::size_t vertex) const;
  /// Every vertex of the edge lies in one block.
  bool contains(const Hypergraph::Edge& e) const;
  /// Refinement: every block of *this lies inside a block of other.
  bool refines(const ConnectedPartition& other) const;

  friend bool operator==(const ConnectedPartition&, const ConnectedPartition&) = default;

 private:
  std::vector<std::size_t> block_of_;
  std::size_t num_blocks_ = 0;
};

/// All connected partitions of a hypergraph under refinement. Elements are
/// sorted by decreasing block count, so position order extends the partial
/// order. Möbius rows are cached on first use.
class BondLattice {
 public:
  const std::vector<ConnectedPartition>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return elements_.size() - 1; }
  std::size_t index_of(const ConnectedPartition& pi) const;

  bool leq(std::size_t a, std::size_t b) const { return elements_[a].refines(elements_[b]); }

  /// mu(a, b); throws std::invalid_argument unless a <= b.
  Integer mobius(std::size_t a, std::size_t b) const;
  /// mu(a, .) over all elements (zero outside the up-set of a).
  const std::vector<Integer>& mobius_row(std::size_t a) const;

 private:
  friend BondLattice connected_partitions(const Hypergraph& h, std::size_t max_vertices);

  std::vector<ConnectedPartition> elements_;
  mutable std::map<std::size_t, std::vector<Integer>> mobius_rows_;
};

/// Enumerates every partition whose non-singleton blocks induce connected
/// vertex sections. Throws BudgetExceeded above max_vertices.
BondLattice connected_partitions(const Hypergraph& h,
                                 std::size_t max_vertices = kLatticeMaxVertices);

/// Integer mu(pi, sigma) on the bond lattice.
Integer mobius(const BondLattice& lattice, const ConnectedPartition& pi,
               const ConnectedPartition& sigma);

/// Colorings in which every non-singleton block of pi is monochromatic in a
/// primary color and every primary edge lies inside a block of pi.
Integer h_count(const Hypergraph& h, const ConnectedPartition& pi, unsigned p, unsigned q,
                std::uint64_t budget = kColoringBudget);

/// h_count for every element of the lattice in one pass over the colorings,
/// indexed like lattice.elements(). Requires n <= 64.
std::vector<Integer> h_counts(const Hypergraph& h, const BondLattice& lattice, unsigned p,
                              unsigned q, std::uint64_t budget = kColoringBudget);

/// The colorings counted by h_count, each weighted by prod of t{e} over its
/// primary edges.
Poly h_weighted(const Hypergraph& h, const ConnectedPartition& pi, unsigned p, unsigned q,
                std::uint64_t budget = kColoringBudget);

/// Weighted count of colorings in which every non-singleton block of sigma is
/// monochromatic primary, with a vertex of primary color weighted by the
/// product of t{e} over its 1-edges:
///   prod_{singletons v} (q - p + p s_v) * prod_{blocks B} p prod_{v in B} s_v.
/// Without 1-edges this is q^k1(sigma) p^(|sigma| - k1(sigma)).
Poly block_weight(const Hypergraph& h, const ConnectedPartition& sigma);

/// sum_pi [sum_{sigma >= pi} mu(pi, sigma) block_weight(sigma)]
///        * prod_{|e| >= 2, e inside a block of pi} t{e}.
Poly chromatic_via_mobius(const Hypergraph& h, std::size_t max_vertices = kLatticeMaxVertices);

}  // namespace hypoly
