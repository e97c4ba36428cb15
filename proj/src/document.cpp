#include "hypoly/document.hpp"

#include <utility>
#include <vector>

namespace hypoly {

namespace {

std::vector<std::string> string_list(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaViolation(where + " must be an array");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) throw SchemaViolation(where + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Hypergraph hypergraph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw SchemaViolation("document must be an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "vertices" && key != "edges") throw SchemaViolation("unexpected key \"" + key + "\"");
  }
  if (!doc.contains("vertices")) throw SchemaViolation("missing \"vertices\"");
  if (!doc.contains("edges")) throw SchemaViolation("missing \"edges\"");
  auto vertices = string_list(doc.at("vertices"), "\"vertices\"");

  const auto& edges = doc.at("edges");
  if (!edges.is_array()) throw SchemaViolation("\"edges\" must be an array");
  std::vector<std::pair<std::string, std::vector<std::string>>> specs;
  for (const auto& edge : edges) {
    if (!edge.is_object()) throw SchemaViolation("each edge must be an object");
    for (const auto& [key, value] : edge.items()) {
      if (key != "id" && key != "vertices") {
        throw SchemaViolation("unexpected edge key \"" + key + "\"");
      }
    }
    if (!edge.contains("id") || !edge.at("id").is_string()) {
      throw SchemaViolation("edge \"id\" must be a string");
    }
    if (!edge.contains("vertices")) throw SchemaViolation("edge is missing \"vertices\"");
    const auto id = edge.at("id").get<std::string>();
    specs.emplace_back(id, string_list(edge.at("vertices"), "vertices of edge \"" + id + "\""));
  }
  return make_hypergraph(std::move(vertices), std::move(specs));
}

Hypergraph parse_hypergraph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedDocument(e.what());
  }
  return hypergraph_from_json(doc);
}

nlohmann::json to_document(const Hypergraph& h) {
  nlohmann::json vertices = nlohmann::json::array();
  for (const auto& v : h.vertices()) vertices.push_back(v.str());
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : h.edges()) {
    nlohmann::json members = nlohmann::json::array();
    for (auto i : e.members) members.push_back(h.vertices()[i].str());
    edges.push_back({{"id", e.id.str()}, {"vertices", std::move(members)}});
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

std::string emit_hypergraph(const Hypergraph& h) { return to_document(h).dump(); }

}  // namespace hypoly
