#include "vwc/datasets.hpp"

#include "vwc/errors.hpp"

namespace vwc::datasets {

namespace {

Arc arc(int from, int to) { return Arc{from - 1, to - 1}; }

// clang-format off
const DisplayedIdeal kD1 = {
    {{1, 1}, {3, 1}}, {{1, 1}, {4, 1}}, {{1, 1}, {7, 1}}, {{1, 1}, {10, 1}}, {{1, 1}, {11, 2}},
    {{2, 1}, {4, 1}}, {{2, 1}, {5, 1}}, {{2, 1}, {8, 1}}, {{2, 1}, {10, 1}}, {{2, 1}, {11, 2}},
    {{3, 1}, {5, 1}}, {{3, 1}, {6, 1}}, {{3, 1}, {8, 1}}, {{3, 1}, {11, 2}}, {{4, 1}, {6, 1}},
    {{4, 1}, {9, 1}}, {{4, 1}, {11, 2}}, {{5, 1}, {7, 1}}, {{5, 1}, {9, 1}}, {{5, 1}, {11, 1}},
    {{6, 1}, {8, 1}}, {{6, 1}, {9, 1}}, {{7, 1}, {9, 1}}, {{7, 1}, {10, 1}}, {{8, 1}, {10, 1}},
};

const DisplayedIdeal kD2 = {
    {{1, 1}, {3, 1}}, {{1, 1}, {4, 1}}, {{1, 1}, {7, 1}}, {{1, 1}, {10, 1}}, {{1, 1}, {11, 1}},
    {{2, 1}, {4, 1}}, {{2, 1}, {5, 1}}, {{2, 1}, {8, 1}}, {{2, 1}, {10, 1}}, {{2, 1}, {11, 1}},
    {{3, 1}, {5, 1}}, {{3, 1}, {6, 1}}, {{3, 1}, {8, 1}}, {{3, 1}, {11, 1}}, {{4, 1}, {6, 1}},
    {{4, 1}, {9, 1}}, {{4, 1}, {11, 1}}, {{5, 1}, {7, 1}}, {{5, 1}, {9, 1}}, {{5, 1}, {11, 1}},
    {{6, 1}, {8, 1}}, {{6, 1}, {9, 1}}, {{7, 2}, {9, 1}}, {{7, 1}, {10, 1}}, {{8, 1}, {10, 1}},
};

const DisplayedIdeal kGw1 = {
    {{1, 1}, {3, 1}}, {{1, 1}, {4, 1}}, {{1, 1}, {7, 1}}, {{1, 1}, {10, 1}}, {{1, 1}, {11, 1}},
    {{2, 1}, {4, 1}}, {{2, 1}, {5, 1}}, {{2, 1}, {8, 1}}, {{2, 1}, {10, 1}}, {{2, 1}, {11, 1}},
    {{3, 1}, {5, 1}}, {{3, 1}, {6, 1}}, {{3, 1}, {8, 1}}, {{3, 1}, {11, 1}}, {{4, 1}, {6, 1}},
    {{4, 1}, {9, 1}}, {{4, 1}, {11, 1}}, {{5, 1}, {7, 1}}, {{5, 1}, {9, 1}}, {{5, 1}, {11, 1}},
    {{6, 1}, {8, 1}}, {{6, 1}, {9, 1}}, {{7, 1}, {9, 1}}, {{7, 1}, {10, 1}}, {{8, 2}, {10, 2}},
};

const DisplayedIdeal kGw2 = {
    {{1, 2}, {3, 2}}, {{1, 2}, {4, 2}}, {{1, 2}, {7, 2}}, {{1, 2}, {10, 2}}, {{1, 2}, {11, 2}},
    {{2, 2}, {4, 2}}, {{2, 2}, {5, 2}}, {{2, 2}, {8, 2}}, {{2, 2}, {10, 2}}, {{2, 2}, {11, 2}},
    {{3, 2}, {5, 2}}, {{3, 2}, {6, 2}}, {{3, 2}, {8, 2}}, {{3, 2}, {11, 2}}, {{4, 2}, {6, 2}},
    {{4, 2}, {9, 2}}, {{4, 2}, {11, 2}}, {{5, 2}, {7, 2}}, {{5, 2}, {9, 2}}, {{5, 2}, {11, 2}},
    {{6, 2}, {8, 2}}, {{6, 2}, {9, 2}}, {{7, 2}, {9, 2}}, {{7, 2}, {10, 2}}, {{8, 1}, {10, 1}},
};
// clang-format on

std::vector<long> weights_with(int vertex, long w) {
  std::vector<long> out(kOrder, 1);
  out[vertex - 1] = w;
  return out;
}

}  // namespace

const std::vector<Arc>& arcs() {
  // Listed in the displayed order.
  static const std::vector<Arc> kArcs = {
      arc(1, 3),  arc(1, 4), arc(7, 1), arc(1, 10), arc(1, 11), arc(2, 4), arc(2, 5),
      arc(2, 8),  arc(2, 10), arc(2, 11), arc(3, 5), arc(3, 6), arc(3, 8), arc(3, 11),
      arc(4, 6),  arc(4, 9), arc(4, 11), arc(7, 5), arc(5, 9), arc(11, 5), arc(6, 8),
      arc(6, 9),  arc(9, 7), arc(7, 10), arc(8, 10),
  };
  return kArcs;
}

std::vector<long> vertex_weights_w1() { return weights_with(11, 2); }
std::vector<long> vertex_weights_w2() { return weights_with(7, 2); }

VertexWeightedOrientedGraph d1() { return VertexWeightedOrientedGraph(kOrder, arcs(), vertex_weights_w1()); }
VertexWeightedOrientedGraph d2() { return VertexWeightedOrientedGraph(kOrder, arcs(), vertex_weights_w2()); }

LabeledGraph graph_g() { return d1().underlying(); }

EdgeWeighting edge_weights_w1() {
  EdgeWeighting w;
  const LabeledGraph g = graph_g();
  for (const Edge& e : g.edges()) w[e] = 1;
  w[Edge(7, 9)] = 2;  // x_8 x_10
  return w;
}

EdgeWeighting edge_weights_w2() {
  EdgeWeighting w;
  const LabeledGraph g = graph_g();
  for (const Edge& e : g.edges()) w[e] = 2;
  w[Edge(7, 9)] = 1;
  return w;
}

const DisplayedIdeal& displayed_d1() { return kD1; }
const DisplayedIdeal& displayed_d2() { return kD2; }
const DisplayedIdeal& displayed_gw1() { return kGw1; }
const DisplayedIdeal& displayed_gw2() { return kGw2; }

MonomialIdeal to_ideal(const DisplayedIdeal& d) {
  std::vector<Monomial> gens;
  for (const auto& g : d) {
    std::vector<std::uint32_t> e(kOrder, 0);
    for (auto [var, exp] : g) e.at(var - 1) = static_cast<std::uint32_t>(exp);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(kOrder, std::move(gens));
}

std::vector<std::string> example_names() { return {"G", "D1", "D2", "Gw1", "Gw2"}; }

Example example(const std::string& name) {
  if (name == "G") return {name, edge_ideal(graph_g()), {1, 1, -1, 3, 8, -1}};
  if (name == "D1") return {name, oriented_edge_ideal(d1()), {1, 0, 2, 3, 8, 1}};
  if (name == "D2") return {name, oriented_edge_ideal(d2()), {1, 0, 2, 3, 8, 0}};
  if (name == "Gw1") return {name, weighted_edge_ideal(graph_g(), edge_weights_w1()), {1, 0, -1, 3, 8, 0}};
  if (name == "Gw2") return {name, weighted_edge_ideal(graph_g(), edge_weights_w2()), {1, 0, -1, 3, 8, 1}};
  throw InputError("unknown example '" + name + "'; expected one of G, D1, D2, Gw1, Gw2");
}

}  // namespace vwc::datasets
