#include "hypoly/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hypoly/errors.hpp"

namespace hypoly {

struct HypergraphBuilder {
  static Hypergraph with_counter(Hypergraph h, std::uint64_t counter) {
    h.fresh_counter_ = counter;
    return h;
  }
};

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<VertexId> member_labels(const Hypergraph& h, const Hypergraph::Edge& e) {
  std::vector<VertexId> out;
  out.reserve(e.members.size());
  for (auto i : e.members) out.push_back(h.vertices()[i]);
  return out;
}

const Hypergraph::Edge& require_edge(const Hypergraph& h, const EdgeId& e) {
  if (!h.has_edge(e)) throw ValidationError("unknown edge id '" + e.str() + "'");
  return h.edge(e);
}

bool meets(const Hypergraph::Edge& a, const Hypergraph::Edge& b) {
  auto i = a.members.begin();
  auto j = b.members.begin();
  while (i != a.members.end() && j != b.members.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace

Hypergraph::Hypergraph(std::vector<VertexId> vertices, std::vector<EdgeSpec> edges) {
  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end()); dup != vertices.end()) {
    throw ValidationError("duplicate vertex id '" + dup->str() + "'");
  }
  vertices_ = std::move(vertices);

  std::sort(edges.begin(), edges.end(),
            [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i - 1].id == edges[i].id) {
      throw ValidationError("duplicate edge id '" + edges[i].id.str() + "'");
    }
  }

  edges_.reserve(edges.size());
  for (auto& spec : edges) {
    if (spec.vertices.empty()) throw ValidationError("edge '" + spec.id.str() + "' is empty");
    Edge edge{std::move(spec.id), {}};
    edge.members.reserve(spec.vertices.size());
    for (const auto& v : spec.vertices) {
      auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
      if (it == vertices_.end() || *it != v) {
        throw ValidationError("edge '" + edge.id.str() + "' references unknown vertex '" +
                              v.str() + "'");
      }
      edge.members.push_back(static_cast<std::size_t>(it - vertices_.begin()));
    }
    std::sort(edge.members.begin(), edge.members.end());
    edge.members.erase(std::unique(edge.members.begin(), edge.members.end()), edge.members.end());
    edges_.push_back(std::move(edge));
  }
}

std::vector<EdgeId> Hypergraph::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges_.size());
  for (const auto& e : edges_) ids.push_back(e.id);
  return ids;
}

bool Hypergraph::has_edge(const EdgeId& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, const EdgeId& id) { return a.id < id; });
  return it != edges_.end() && it->id == e;
}

const Hypergraph::Edge& Hypergraph::edge(const EdgeId& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const Edge& a, const EdgeId& id) { return a.id < id; });
  if (it == edges_.end() || it->id != e) {
    throw ValidationError("unknown edge id '" + e.str() + "'");
  }
  return *it;
}

std::vector<VertexId> Hypergraph::edge_vertices(const EdgeId& e) const {
  return member_labels(*this, edge(e));
}

std::size_t Hypergraph::vertex_index(const VertexId& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw ValidationError("unknown vertex id '" + v.str() + "'");
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::uint64_t Hypergraph::member_mask(const Edge& e) const {
  if (vertices_.size() > 64) throw BudgetExceeded("bit-mask operations need at most 64 vertices");
  std::uint64_t mask = 0;
  for (auto i : e.members) mask |= std::uint64_t{1} << i;
  return mask;
}

Hypergraph make_hypergraph(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& edges) {
  std::vector<VertexId> vs;
  vs.reserve(vertices.size());
  for (const auto& v : vertices) vs.emplace_back(v);
  std::vector<EdgeSpec> es;
  es.reserve(edges.size());
  for (const auto& [id, members] : edges) {
    EdgeSpec spec{EdgeId(id), {}};
    for (const auto& v : members) spec.vertices.emplace_back(v);
    es.push_back(std::move(spec));
  }
  return Hypergraph(std::move(vs), std::move(es));
}

Hypergraph delete_edge(const Hypergraph& h, const EdgeId& e) {
  require_edge(h, e);
  std::vector<EdgeSpec> edges;
  for (const auto& f : h.edges()) {
    if (f.id != e) edges.push_back({f.id, member_labels(h, f)});
  }
  return HypergraphBuilder::with_counter(Hypergraph(h.vertices(), std::move(edges)),
                                         h.fresh_counter());
}

Hypergraph extract(const Hypergraph& h, const EdgeId& e) {
  const auto& pivot = require_edge(h, e);
  std::vector<VertexId> vertices;
  std::size_t k = 0;
  for (std::size_t i = 0; i < h.num_vertices(); ++i) {
    if (k < pivot.members.size() && pivot.members[k] == i) {
      ++k;
      continue;
    }
    vertices.push_back(h.vertices()[i]);
  }
  std::vector<EdgeSpec> edges;
  for (const auto& f : h.edges()) {
    if (!meets(f, pivot)) edges.push_back({f.id, member_labels(h, f)});
  }
  return HypergraphBuilder::with_counter(Hypergraph(std::move(vertices), std::move(edges)),
                                         h.fresh_counter());
}

Hypergraph contract(const Hypergraph& h, const EdgeId& e) {
  const auto& pivot = require_edge(h, e);
  std::uint64_t counter = h.fresh_counter();
  VertexId fresh;
  do {
    fresh = VertexId("\xCE\xBA:" + e.str() + ":" + std::to_string(counter++));
  } while (std::binary_search(h.vertices().begin(), h.vertices().end(), fresh));

  std::vector<VertexId> vertices;
  std::vector<bool> in_pivot(h.num_vertices(), false);
  for (auto i : pivot.members) in_pivot[i] = true;
  for (std::size_t i = 0; i < h.num_vertices(); ++i) {
    if (!in_pivot[i]) vertices.push_back(h.vertices()[i]);
  }
  vertices.push_back(fresh);

  std::vector<EdgeSpec> edges;
  for (const auto& f : h.edges()) {
    if (f.id == e) continue;
    EdgeSpec spec{f.id, {}};
    bool touched = false;
    for (auto i : f.members) {
      if (in_pivot[i]) {
        touched = true;
      } else {
        spec.vertices.push_back(h.vertices()[i]);
      }
    }
    if (touched) spec.vertices.push_back(fresh);
    edges.push_back(std::move(spec));
  }
  return HypergraphBuilder::with_counter(Hypergraph(std::move(vertices), std::move(edges)),
                                         counter);
}

std::vector<std::size_t> component_labels(const Hypergraph& h) {
  DisjointSets sets(h.num_vertices());
  for (const auto& e : h.edges()) {
    for (std::size_t k = 1; k < e.members.size(); ++k) sets.unite(e.members[0], e.members[k]);
  }
  std::vector<std::size_t> labels(h.num_vertices());
  std::map<std::size_t, std::size_t> numbering;
  for (std::size_t v = 0; v < h.num_vertices(); ++v) {
    auto root = sets.find(v);
    auto [it, inserted] = numbering.emplace(root, numbering.size());
    labels[v] = it->second;
  }
  return labels;
}

std::size_t num_components(const Hypergraph& h) {
  auto labels = component_labels(h);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

std::vector<Hypergraph> components(const Hypergraph& h) {
  auto labels = component_labels(h);
  std::size_t count = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<VertexId>> vertex_groups(count);
  std::vector<std::vector<EdgeSpec>> edge_groups(count);
  for (std::size_t v = 0; v < h.num_vertices(); ++v) vertex_groups[labels[v]].push_back(h.vertices()[v]);
  for (const auto& e : h.edges()) {
    edge_groups[labels[e.members.front()]].push_back({e.id, member_labels(h, e)});
  }
  std::vector<Hypergraph> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    out.push_back(HypergraphBuilder::with_counter(
        Hypergraph(std::move(vertex_groups[c]), std::move(edge_groups[c])), h.fresh_counter()));
  }
  return out;
}

Hypergraph vertex_section(const Hypergraph& h, const VertexSet& s) {
  std::vector<bool> inside(h.num_vertices(), false);
  for (const auto& v : s) inside[h.vertex_index(v)] = true;
  std::vector<EdgeSpec> edges;
  for (const auto& e : h.edges()) {
    if (std::all_of(e.members.begin(), e.members.end(), [&](auto i) { return inside[i]; })) {
      edges.push_back({e.id, member_labels(h, e)});
    }
  }
  return Hypergraph(std::vector<VertexId>(s.begin(), s.end()), std::move(edges));
}

Hypergraph partial(const Hypergraph& h, const EdgeSet& j) {
  for (const auto& id : j) require_edge(h, id);
  std::vector<EdgeSpec> edges;
  for (const auto& e : h.edges()) {
    if (j.count(e.id)) edges.push_back({e.id, member_labels(h, e)});
  }
  return Hypergraph(h.vertices(), std::move(edges));
}

Hypergraph edge_section(const Hypergraph& h, const EdgeSet& j) {
  std::set<VertexId> covered;
  std::vector<EdgeSpec> edges;
  for (const auto& id : j) {
    const auto& e = require_edge(h, id);
    auto labels = member_labels(h, e);
    covered.insert(labels.begin(), labels.end());
    edges.push_back({id, std::move(labels)});
  }
  return Hypergraph(std::vector<VertexId>(covered.begin(), covered.end()), std::move(edges));
}

Hypergraph subhypergraph(const Hypergraph& h, const VertexSet& a) {
  std::vector<bool> inside(h.num_vertices(), false);
  for (const auto& v : a) inside[h.vertex_index(v)] = true;
  std::vector<EdgeSpec> edges;
  for (const auto& e : h.edges()) {
    EdgeSpec spec{e.id, {}};
    for (auto i : e.members) {
      if (inside[i]) spec.vertices.push_back(h.vertices()[i]);
    }
    if (!spec.vertices.empty()) edges.push_back(std::move(spec));
  }
  return Hypergraph(std::vector<VertexId>(a.begin(), a.end()), std::move(edges));
}

bool union_needs_namespacing(const Hypergraph& a, const Hypergraph& b) {
  for (const auto& v : b.vertices()) {
    if (std::binary_search(a.vertices().begin(), a.vertices().end(), v)) return true;
  }
  for (const auto& e : b.edges()) {
    if (a.has_edge(e.id)) return true;
  }
  return false;
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  const bool rename = union_needs_namespacing(a, b);
  std::vector<VertexId> vertices;
  std::vector<EdgeSpec> edges;
  auto append = [&](const Hypergraph& h, const std::string& prefix) {
    for (const auto& v : h.vertices()) vertices.emplace_back(prefix + v.str());
    for (const auto& e : h.edges()) {
      EdgeSpec spec{EdgeId(prefix + e.id.str()), {}};
      for (auto i : e.members) spec.vertices.emplace_back(prefix + h.vertices()[i].str());
      edges.push_back(std::move(spec));
    }
  };
  append(a, rename ? "1:" : "");
  append(b, rename ? "2:" : "");
  return Hypergraph(std::move(vertices), std::move(edges));
}

void for_each_vertex_disjoint_pair(const Hypergraph& h,
                                   const std::function<void(const EdgeSubsetPair&)>& visit) {
  std::vector<std::uint64_t> masks;
  masks.reserve(h.num_edges());
  for (const auto& e : h.edges()) masks.push_back(h.member_mask(e));

  EdgeSubsetPair current;
  std::function<void(std::size_t, std::uint64_t, std::uint64_t)> walk =
      [&](std::size_t i, std::uint64_t first_cover, std::uint64_t second_cover) {
        if (i == masks.size()) {
          visit(current);
          return;
        }
        const auto& id = h.edges()[i].id;
        walk(i + 1, first_cover, second_cover);
        if ((masks[i] & second_cover) == 0) {
          current.first.insert(id);
          walk(i + 1, first_cover | masks[i], second_cover);
          current.first.erase(id);
        }
        if ((masks[i] & first_cover) == 0) {
          current.second.insert(id);
          walk(i + 1, first_cover, second_cover | masks[i]);
          current.second.erase(id);
        }
      };
  walk(0, 0, 0);
}

std::vector<EdgeSubsetPair> vertex_disjoint_pairs(const Hypergraph& h) {
  std::vector<EdgeSubsetPair> out;
  for_each_vertex_disjoint_pair(h, [&](const EdgeSubsetPair& p) { out.push_back(p); });
  return out;
}

}  // namespace hypoly
