#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vwc/graph.hpp"
#include "vwc/monomial.hpp"

namespace vwc::datasets {

/// Variables x_1..x_11 are stored as vertices 0..10.
inline constexpr int kOrder = 11;

/// The 25 arcs of the oriented graph D, 0-based.
const std::vector<Arc>& arcs();

/// Vertex weights: w_1 puts 2 on x_11, w_2 puts 2 on x_7.
std::vector<long> vertex_weights_w1();
std::vector<long> vertex_weights_w2();

VertexWeightedOrientedGraph d1();
VertexWeightedOrientedGraph d2();

/// Underlying graph G of D.
LabeledGraph graph_g();

/// Edge weightings of G: the first is 2 on x_8x_10 only, the second is 2
/// everywhere except x_8x_10.
EdgeWeighting edge_weights_w1();
EdgeWeighting edge_weights_w2();

/// Generator lists as displayed, each generator a list of (variable, exponent)
/// pairs with 1-based variables. Used to cross-check the builders.
using DisplayedIdeal = std::vector<std::vector<std::pair<int, int>>>;
const DisplayedIdeal& displayed_d1();
const DisplayedIdeal& displayed_d2();
const DisplayedIdeal& displayed_gw1();
const DisplayedIdeal& displayed_gw2();
MonomialIdeal to_ideal(const DisplayedIdeal& d);

/// Expected values; -1 means not stated.
struct Expected {
  int unmixed = -1;
  int cm = -1;
  int depth = -1;
  int dim = -1;
  int height = -1;
  int s2 = -1;  ///< stated for the original ring, not the polarization
};

struct Example {
  std::string name;
  MonomialIdeal ideal;
  Expected expected;
};

/// "G", "D1", "D2", "Gw1", "Gw2". Throws InputError on other names.
Example example(const std::string& name);
std::vector<std::string> example_names();

}  // namespace vwc::datasets
