#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hypoly {

/// Opaque, totally ordered label. The tag keeps vertex and edge labels apart.
template <typename Tag>
class Label {
 public:
  Label() = default;
  explicit Label(std::string text) : text_(std::move(text)) {}

  const std::string& str() const { return text_; }

  friend auto operator<=>(const Label&, const Label&) = default;
  friend bool operator==(const Label&, const Label&) = default;

 private:
  std::string text_;
};

struct VertexTag {};
struct EdgeTag {};
using VertexId = Label<VertexTag>;
using EdgeId = Label<EdgeTag>;

using VertexSet = std::set<VertexId>;
using EdgeSet = std::set<EdgeId>;

/// Input record for one hyperedge.
struct EdgeSpec {
  EdgeId id;
  std::vector<VertexId> vertices;
};

/// Ordered pair (I, J) of disjoint edge sets with every I-edge vertex-disjoint
/// from every J-edge.
struct EdgeSubsetPair {
  EdgeSet first;
  EdgeSet second;
};

/// Immutable finite hypergraph with indexed (possibly parallel) edges.
///
/// Vertices are kept in sorted label order and edges in sorted EdgeId order;
/// every iteration the class exposes follows that order. Edge members are
/// stored as sorted indices into the vertex list.
class Hypergraph {
 public:
  struct Edge {
    EdgeId id;
    std::vector<std::size_t> members;
  };

  Hypergraph() = default;

  /// Validates and normalizes. Throws ValidationError on duplicate labels,
  /// unknown vertices, or empty edges. Repeated vertices within one edge
  /// collapse.
  Hypergraph(std::vector<VertexId> vertices, std::vector<EdgeSpec> edges);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::vector<EdgeId> edge_ids() const;
  std::vector<VertexId> edge_vertices(const EdgeId& e) const;
  const Edge& edge(const EdgeId& e) const;
  bool has_edge(const EdgeId& e) const;

  /// Index of a vertex label; throws ValidationError if absent.
  std::size_t vertex_index(const VertexId& v) const;

  /// Bit mask of an edge's vertex indices. Requires num_vertices() <= 64.
  std::uint64_t member_mask(const Edge& e) const;

  /// Counter feeding fresh contraction-vertex labels.
  std::uint64_t fresh_counter() const { return fresh_counter_; }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  friend struct HypergraphBuilder;

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::uint64_t fresh_counter_ = 0;
};

inline bool operator==(const Hypergraph::Edge& a, const Hypergraph::Edge& b) {
  return a.id == b.id && a.members == b.members;
}

/// Convenience constructor from plain strings.
Hypergraph make_hypergraph(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& edges);

// Structural operations. All are pure and keep surviving EdgeIds unchanged.

Hypergraph delete_edge(const Hypergraph& h, const EdgeId& e);
Hypergraph contract(const Hypergraph& h, const EdgeId& e);
Hypergraph extract(const Hypergraph& h, const EdgeId& e);

/// Connected components, ordered by their smallest vertex label.
std::vector<Hypergraph> components(const Hypergraph& h);
std::size_t num_components(const Hypergraph& h);

/// Component index of every vertex (indexed like h.vertices()), numbered in
/// order of first appearance.
std::vector<std::size_t> component_labels(const Hypergraph& h);

Hypergraph vertex_section(const Hypergraph& h, const VertexSet& s);
Hypergraph partial(const Hypergraph& h, const EdgeSet& j);
Hypergraph edge_section(const Hypergraph& h, const EdgeSet& j);
Hypergraph subhypergraph(const Hypergraph& h, const VertexSet& a);

/// Tagged union. When any vertex or edge label collides, every label of the
/// left operand is prefixed with "1:" and of the right with "2:".
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

/// True when disjoint_union(a, b) would rename labels.
bool union_needs_namespacing(const Hypergraph& a, const Hypergraph& b);

/// Visits every vertex-disjoint pair in a fixed depth-first order: the
/// smallest EdgeId branches outermost, trying absent, first, second in turn.
/// Requires num_vertices() <= 64.
void for_each_vertex_disjoint_pair(const Hypergraph& h,
                                   const std::function<void(const EdgeSubsetPair&)>& visit);
std::vector<EdgeSubsetPair> vertex_disjoint_pairs(const Hypergraph& h);

}  // namespace hypoly
