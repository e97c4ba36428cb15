#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hypoly/hypergraph.hpp"

namespace hypoly {

/// Input is not well-formed JSON.
class MalformedDocument : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON is well-formed but does not have the document shape.
class SchemaViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads {"vertices": [...], "edges": [{"id": ..., "vertices": [...]}]}.
/// Throws MalformedDocument, SchemaViolation, or ValidationError.
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph hypergraph_from_json(const nlohmann::json& doc);

/// The document in sorted label order.
nlohmann::json to_document(const Hypergraph& h);
std::string emit_hypergraph(const Hypergraph& h);

}  // namespace hypoly
