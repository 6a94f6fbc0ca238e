#include "vwc/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "vwc/errors.hpp"

namespace vwc::io {

namespace {

std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw InputError(what + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(what + ": missing \"" + key + "\"");
  return *it;
}

long as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer, got " + v.dump());
  return v.get<long>();
}

std::vector<long> int_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array, got " + v.dump());
  std::vector<long> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_int(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

int vertex_count(const json& j, const char* key, const std::string& what) {
  const long n = as_int(field(j, key, what), std::string(key));
  if (n < 0 || n > kMaxVars) throw InputError(std::string(key) + ": " + std::to_string(n) + " outside [0, 64]");
  return static_cast<int>(n);
}

std::vector<int> to_ints(const std::vector<long>& v) { return {v.begin(), v.end()}; }

}  // namespace

json parse(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": malformed JSON at " + position(text, e.byte == 0 ? 0 : e.byte - 1) +
                     ": " + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

GraphDocument graph_from_json(const json& j) {
  const int n = vertex_count(j, "n", "graph");
  const json& edges = field(j, "edges", "graph");
  if (!edges.is_array()) throw InputError("edges: expected an array");
  std::vector<Edge> list;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string where = "edges[" + std::to_string(k) + "]";
    const auto e = int_list(edges[k], where);
    if (e.size() != 2) throw InputError(where + ": expected [u,v]");
    list.push_back(Edge{static_cast<int>(e[0]), static_cast<int>(e[1])});
    if (e[0] == e[1]) throw InputError(where + ": loop");
  }
  GraphDocument doc{LabeledGraph(n, list), std::nullopt, std::nullopt};

  if (auto it = j.find("edge_weights"); it != j.end()) {
    if (!it->is_array()) throw InputError("edge_weights: expected an array");
    EdgeWeighting w;
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string where = "edge_weights[" + std::to_string(k) + "]";
      const auto e = int_list((*it)[k], where);
      if (e.size() != 3) throw InputError(where + ": expected [u,v,w]");
      const Edge edge(static_cast<int>(e[0]), static_cast<int>(e[1]));
      if (!w.emplace(edge, e[2]).second) throw InputError(where + ": edge weighted twice");
      if (e[0] < 0 || e[1] < 0 || e[0] >= n || e[1] >= n || !doc.graph.has_edge(edge))
        throw InputError(where + ": not an edge of the graph");
      if (e[2] < 1 || e[2] > kMaxExponent) throw InputError(where + ": weight outside [1, 65536]");
    }
    validate_weighting(doc.graph, w);
    doc.weights = std::move(w);
  }
  if (auto it = j.find("labeling"); it != j.end()) {
    VWCLabeling lab{to_ints(int_list(field(*it, "x", "labeling"), "labeling.x")),
                    to_ints(int_list(field(*it, "y", "labeling"), "labeling.y"))};
    validate_labeling(doc.graph, lab);
    doc.labeling = std::move(lab);
  }
  return doc;
}

json to_json(const GraphDocument& g) {
  json j;
  j["n"] = g.graph.order();
  j["edges"] = json::array();
  for (const Edge& e : g.graph.edges()) j["edges"].push_back({e.u, e.v});
  if (g.weights) {
    j["edge_weights"] = json::array();
    for (const auto& [e, w] : *g.weights) j["edge_weights"].push_back({e.u, e.v, w});
  }
  if (g.labeling) j["labeling"] = {{"x", g.labeling->x}, {"y", g.labeling->y}};
  return j;
}

OrientedDocument oriented_from_json(const json& j) {
  const int n = vertex_count(j, "n", "oriented graph");
  const json& arcs = field(j, "arcs", "oriented graph");
  if (!arcs.is_array()) throw InputError("arcs: expected an array");
  std::vector<Arc> list;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const std::string where = "arcs[" + std::to_string(k) + "]";
    const auto a = int_list(arcs[k], where);
    if (a.size() != 2) throw InputError(where + ": expected [from,to]");
    list.push_back(Arc{static_cast<int>(a[0]), static_cast<int>(a[1])});
  }
  std::vector<long> weights(n, 1);
  if (auto it = j.find("vertex_weights"); it != j.end()) weights = int_list(*it, "vertex_weights");
  return OrientedDocument{VertexWeightedOrientedGraph(n, std::move(list), std::move(weights))};
}

json to_json(const VertexWeightedOrientedGraph& d) {
  json j;
  j["n"] = d.order();
  j["arcs"] = json::array();
  for (const Arc& a : d.arcs()) j["arcs"].push_back({a.from, a.to});
  j["vertex_weights"] = d.vertex_weights();
  return j;
}

MonomialIdeal ideal_from_json(const json& j) {
  const long nvars = as_int(field(j, "nvars", "ideal"), "nvars");
  if (nvars < 0) throw InputError("nvars: must be nonnegative");
  const json& gens = field(j, "gens", "ideal");
  if (!gens.is_array()) throw InputError("gens: expected an array");
  std::vector<Monomial> list;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::string where = "gens[" + std::to_string(k) + "]";
    const auto e = int_list(gens[k], where);
    if (static_cast<long>(e.size()) != nvars)
      throw InputError(where + ": expected " + std::to_string(nvars) + " exponents, got " +
                       std::to_string(e.size()));
    std::vector<std::uint32_t> exps;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0 || e[i] > kMaxExponent)
        throw InputError(where + "[" + std::to_string(i) + "]: exponent outside [0, 65536]");
      exps.push_back(static_cast<std::uint32_t>(e[i]));
    }
    if (std::all_of(exps.begin(), exps.end(), [](std::uint32_t x) { return x == 0; }))
      throw InputError(where + ": the unit monomial generates the whole ring");
    list.emplace_back(std::move(exps));
  }
  return MonomialIdeal(static_cast<int>(nvars), std::move(list));
}

json to_json(const MonomialIdeal& ideal) {
  json j;
  j["nvars"] = ideal.nvars();
  j["gens"] = json::array();
  for (const auto& g : ideal.gens()) j["gens"].push_back(g.exponents());
  return j;
}

SimplicialComplex complex_from_json(const json& j) {
  const int n = vertex_count(j, "nverts", "complex");
  const json& facets = field(j, "facets", "complex");
  if (!facets.is_array()) throw InputError("facets: expected an array");
  std::vector<VarSet> list;
  for (std::size_t k = 0; k < facets.size(); ++k) {
    const std::string where = "facets[" + std::to_string(k) + "]";
    VarSet f = 0;
    for (long v : int_list(facets[k], where)) {
      if (v < 0 || v >= n) throw InputError(where + ": vertex " + std::to_string(v) + " out of range");
      if (contains(f, static_cast<int>(v))) throw InputError(where + ": repeated vertex " + std::to_string(v));
      f |= bit(static_cast<int>(v));
    }
    list.push_back(f);
  }
  return SimplicialComplex(n, std::move(list));
}

json to_json(const SimplicialComplex& c) {
  json j;
  j["nverts"] = c.nverts();
  j["facets"] = json::array();
  for (VarSet f : c.facets()) j["facets"].push_back(to_indices(f));
  return j;
}

json to_json(const Violation& v) {
  json j;
  j["clause"] = v.clause;
  if (!v.indices.empty()) j["indices"] = v.indices;
  if (!v.vertices.empty()) j["vertices"] = v.vertices;
  if (!v.weights.empty()) j["weights"] = v.weights;
  if (!v.sets.empty()) j["sets"] = v.sets;
  if (v.degree) j["degree"] = *v.degree;
  if (v.rank) j["rank"] = *v.rank;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

json to_json(const CriterionReport& r) {
  json j;
  j["verdict"] = r.verdict();
  j["violations"] = json::array();
  for (const auto& v : r.violations()) j["violations"].push_back(to_json(v));
  return j;
}

json to_json(const HomologyProfile& h) {
  json ranks = json::object();
  for (int d = -1; d + 1 < static_cast<int>(h.ranks.size()); ++d)
    if (h.rank(d) != 0) ranks[std::to_string(d)] = h.rank(d);
  return ranks;
}

MonomialIdeal ideal_of_document(const json& j) {
  if (!j.is_object()) throw InputError("input: expected a JSON object");
  if (j.contains("gens")) return ideal_from_json(j);
  if (j.contains("arcs")) return oriented_edge_ideal(oriented_from_json(j).graph);
  if (j.contains("edges")) {
    const auto g = graph_from_json(j);
    return g.weights ? weighted_edge_ideal(g.graph, *g.weights) : edge_ideal(g.graph);
  }
  throw InputError("input: expected \"gens\", \"arcs\" or \"edges\"");
}

std::string digest(const json& j) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace vwc::io
