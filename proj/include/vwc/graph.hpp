#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vwc/report.hpp"
#include "vwc/varset.hpp"

namespace vwc {

/// Undirected edge with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Finite simple graph on vertices 0..n-1 without isolated vertices.
class LabeledGraph {
 public:
  /// Throws InputError naming the first loop, duplicate, out-of-range endpoint
  /// or isolated vertex.
  LabeledGraph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  bool adjacent(int a, int b) const { return contains(adj_[a], b); }
  VarSet neighbors(int a) const { return adj_[a]; }
  int degree(int a) const { return count(adj_[a]); }
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  bool operator==(const LabeledGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<VarSet> adj_;
};

/// Condition (*): x_i/y_i pairs with X a minimal vertex cover, Y a maximal
/// independent set and x_i y_i edges of a perfect matching. Stored 0-based;
/// pair p (0-based) is x[p], y[p].
struct VWCLabeling {
  std::vector<int> x;
  std::vector<int> y;

  int half_order() const { return static_cast<int>(x.size()); }
  bool operator==(const VWCLabeling&) const = default;
};

/// Throws InputError unless `lab` is a valid (*) labeling of `g`.
void validate_labeling(const LabeledGraph& g, const VWCLabeling& lab);

/// Positive integer weight per edge; the domain must equal the edge set.
using EdgeWeighting = std::map<Edge, long>;

inline constexpr long kMaxExponent = 1L << 16;

void validate_weighting(const LabeledGraph& g, const EdgeWeighting& w);

/// Graph + (*) labeling + edge weights, validated jointly on construction.
/// Very-well-coveredness itself is not part of the invariant; see
/// check_vwc_characterization.
class WeightedVWCGraph {
 public:
  WeightedVWCGraph(LabeledGraph graph, VWCLabeling labeling, EdgeWeighting weights);

  const LabeledGraph& graph() const { return graph_; }
  const VWCLabeling& labeling() const { return labeling_; }
  const EdgeWeighting& weights() const { return weights_; }
  int half_order() const { return labeling_.half_order(); }

  /// Pair accessors, 0-based.
  int x(int p) const { return labeling_.x[p]; }
  int y(int p) const { return labeling_.y[p]; }
  long weight(int a, int b) const { return weights_.at(Edge(a, b)); }

  bool operator==(const WeightedVWCGraph&) const = default;

 private:
  LabeledGraph graph_;
  VWCLabeling labeling_;
  EdgeWeighting weights_;
};

/// Directed arc (from, to).
struct Arc {
  int from = 0;
  int to = 0;
  auto operator<=>(const Arc&) const = default;
};

/// Oriented graph with positive vertex weights; the weight of the head of an
/// arc becomes its exponent in the edge ideal.
class VertexWeightedOrientedGraph {
 public:
  VertexWeightedOrientedGraph(int n, std::vector<Arc> arcs, std::vector<long> vertex_weights);

  int order() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<long>& vertex_weights() const { return weights_; }
  LabeledGraph underlying() const;

 private:
  int n_;
  std::vector<Arc> arcs_;
  std::vector<long> weights_;
};

/// Role name of a vertex under a labeling: "x3" / "y1" (1-based), or "v7".
std::string role_name(const VWCLabeling& lab, int vertex);

// --- operations ------------------------------------------------------------

inline constexpr int kMaxIndependentSetVertices = 32;

/// All inclusion-maximal independent sets, each ascending, list sorted
/// lexicographically. Throws ResourceLimitError above 32 vertices.
std::vector<std::vector<int>> maximal_independent_sets(const LabeledGraph& g);

bool is_very_well_covered(const LabeledGraph& g);

/// A perfect matching, deterministic for fixed input, or nullopt.
std::optional<std::vector<Edge>> find_perfect_matching(const LabeledGraph& g);

/// Perfect matching between `left` and its complement using only edges that
/// cross the split. Left vertices are served in ascending order.
std::optional<std::vector<Edge>> find_split_matching(const LabeledGraph& g, VarSet left);

/// Lexicographically smallest maximal independent set as Y, pairs ordered by
/// ascending x. Throws InputError if g is not very well-covered.
VWCLabeling star_labeling(const LabeledGraph& g);

/// The two clauses characterizing very well-covered graphs under a (*) labeling.
CriterionReport check_vwc_characterization(const LabeledGraph& g, const VWCLabeling& lab);

/// Reorders the pairs so that every cross edge x_i y_j has i <= j, or nullopt
/// when the cross-edge digraph has a cycle. Smallest index first among ties.
std::optional<VWCLabeling> doublestar_relabeling(const LabeledGraph& g, const VWCLabeling& lab);

/// A directed cycle (0-based pair indices, first repeated implicitly) in the
/// cross-edge digraph, empty when acyclic.
std::vector<int> cross_edge_cycle(const LabeledGraph& g, const VWCLabeling& lab);

/// N_i = {k : x_k y_i in E} minus {i}, ascending. Indices are 1-based.
std::vector<int> o_i_neighbourhood(const WeightedVWCGraph& gw, int pair);

/// The O_i operator with `pair` 1-based. Throws StructuralConflict when some
/// x_k x_i is already an edge.
WeightedVWCGraph o_i_operator(const WeightedVWCGraph& gw, int pair);

struct RandomVwcParams {
  int half_order = 1;
  double edge_density = 0.3;
  long max_weight = 1;
  std::uint64_t seed = 0;
};

/// Generative very well-covered graph: x_i = vertex i-1, y_i = vertex h+i-1.
WeightedVWCGraph random_weighted_vwc(const RandomVwcParams& params);

}  // namespace vwc
