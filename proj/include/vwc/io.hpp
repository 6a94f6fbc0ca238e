#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "vwc/chain.hpp"
#include "vwc/graph.hpp"
#include "vwc/monomial.hpp"
#include "vwc/report.hpp"
#include "vwc/simplicial.hpp"

namespace vwc::io {

using nlohmann::json;

/// Parses JSON text; malformed input raises InputError with line and column.
json parse(const std::string& text, const std::string& source = "input");
json read_file(const std::string& path);

/// {"n", "edges", "edge_weights"?, "labeling"?}
struct GraphDocument {
  LabeledGraph graph;
  std::optional<EdgeWeighting> weights;
  std::optional<VWCLabeling> labeling;

  bool operator==(const GraphDocument&) const = default;
};

/// {"n", "arcs", "vertex_weights"?}; missing weights default to 1.
struct OrientedDocument {
  VertexWeightedOrientedGraph graph;
};

GraphDocument graph_from_json(const json& j);
json to_json(const GraphDocument& g);

OrientedDocument oriented_from_json(const json& j);
json to_json(const VertexWeightedOrientedGraph& d);

/// {"nvars", "gens": [[e_1, ..., e_n], ...]}
MonomialIdeal ideal_from_json(const json& j);
json to_json(const MonomialIdeal& ideal);

/// {"nverts", "facets": [[...], ...]}
SimplicialComplex complex_from_json(const json& j);
json to_json(const SimplicialComplex& c);

json to_json(const Violation& v);
json to_json(const CriterionReport& r);
json to_json(const HomologyProfile& h);

/// The ideal a document stands for: "gens" as given, "arcs" through the
/// oriented construction, "edges" through the (weighted) edge ideal.
MonomialIdeal ideal_of_document(const json& j);

/// 64-bit FNV-1a of the compact dump, as 16 hex digits.
std::string digest(const json& j);

}  // namespace vwc::io
