#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hypoly/hypergraph.hpp"
#include "hypoly/poly.hpp"

namespace fixtures {

using hypoly::Hypergraph;
using hypoly::make_hypergraph;

inline Hypergraph empty() { return make_hypergraph({}, {}); }
inline Hypergraph single() { return make_hypergraph({"1"}, {}); }
inline Hypergraph k2() { return make_hypergraph({"1", "2"}, {{"a", {"1", "2"}}}); }
inline Hypergraph path() {
  return make_hypergraph({"1", "2", "3"}, {{"a", {"1", "2"}}, {"b", {"2", "3"}}});
}
inline Hypergraph k3() {
  return make_hypergraph({"1", "2", "3"},
                         {{"a", {"1", "2"}}, {"b", {"2", "3"}}, {"c", {"1", "3"}}});
}
inline Hypergraph loop() { return make_hypergraph({"1"}, {{"a", {"1"}}}); }

inline hypoly::VertexSet vs(std::initializer_list<const char*> labels) {
  hypoly::VertexSet out;
  for (const auto* l : labels) out.insert(hypoly::VertexId(l));
  return out;
}

inline hypoly::EdgeSet es(std::initializer_list<const char*> labels) {
  hypoly::EdgeSet out;
  for (const auto* l : labels) out.insert(hypoly::EdgeId(l));
  return out;
}

inline std::vector<std::string> labels(const std::vector<hypoly::VertexId>& ids) {
  std::vector<std::string> out;
  for (const auto& v : ids) out.push_back(v.str());
  return out;
}

inline std::vector<std::string> edge_labels(const Hypergraph& h) {
  std::vector<std::string> out;
  for (const auto& e : h.edges()) out.push_back(e.id.str());
  return out;
}

inline std::vector<std::string> members(const Hypergraph& h, const char* e) {
  return labels(h.edge_vertices(hypoly::EdgeId(e)));
}

// Replaces every t{e} by t.
inline hypoly::Poly uniform(const hypoly::Poly& p) { return hypoly::collapse_t(p); }

inline hypoly::Poly with_t_one(const hypoly::Poly& p) {
  return hypoly::substitute(hypoly::collapse_t(p),
                            {{hypoly::VarKey(hypoly::VarKey::Kind::T_UNIFORM), hypoly::Poly(1)}});
}

// Loopy multigraphs on up to max_n vertices with up to max_m edges.
inline std::vector<Hypergraph> graph_suite(unsigned max_n = 4, unsigned max_m = 5) {
  std::vector<Hypergraph> out;
  for (unsigned n = 1; n <= max_n; ++n) {
    std::vector<std::vector<std::string>> kinds;
    for (unsigned a = 1; a <= n; ++a) {
      kinds.push_back({std::to_string(a)});
      for (unsigned b = a + 1; b <= n; ++b) kinds.push_back({std::to_string(a), std::to_string(b)});
    }
    std::vector<std::string> vertices;
    for (unsigned v = 1; v <= n; ++v) vertices.push_back(std::to_string(v));
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      std::vector<std::pair<std::string, std::vector<std::string>>> edges;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        edges.emplace_back(std::string(1, static_cast<char>('a' + i)), kinds[pick[i]]);
      }
      out.push_back(make_hypergraph(vertices, edges));
      if (pick.size() == max_m) return;
      for (std::size_t i = from; i < kinds.size(); ++i) {
        pick.push_back(i);
        rec(i);
        pick.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

}  // namespace fixtures
