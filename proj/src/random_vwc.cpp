#include <random>
#include <set>
#include <stdexcept>

#include "vwc/errors.hpp"
#include "vwc/graph.hpp"

namespace vwc {

// Start from the matching x_i y_i, sprinkle cross edges x_i y_j and cover
// edges x_i x_j, then repair until both characterization clauses hold:
//   (ii)  x_i y_j present  =>  x_i x_j banned;
//   (i)   z x_j, y_j x_k present  =>  add z x_k, or drop the premise z x_j
//         when z = x_i and x_i x_k is banned.
// The banned set and the cross-edge set only grow, so the loop terminates.
WeightedVWCGraph random_weighted_vwc(const RandomVwcParams& params) {
  const int h = params.half_order;
  if (h < 1 || 2 * h > kMaxVars) throw InputError("half order must lie in [1, 32]");
  if (params.max_weight < 1 || params.max_weight > kMaxExponent)
    throw InputError("max weight must lie in [1, 65536]");
  if (!(params.edge_density >= 0.0 && params.edge_density <= 1.0))
    throw InputError("edge density must lie in [0, 1]");

  std::mt19937_64 rng(params.seed);
  std::bernoulli_distribution coin(params.edge_density);
  const int n = 2 * h;
  auto X = [](int i) { return i; };
  auto Y = [h](int i) { return h + i; };

  std::set<Edge> edges, banned;
  for (int i = 0; i < h; ++i) edges.emplace(X(i), Y(i));
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      if (i == j) continue;
      if (coin(rng)) edges.emplace(X(i), Y(j));
      if (i < j && coin(rng)) edges.emplace(X(i), X(j));
    }

  auto has = [&](int a, int b) { return edges.contains(Edge(a, b)); };
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j) {
        if (i == j || !has(X(i), Y(j))) continue;
        banned.emplace(X(i), X(j));
        if (edges.erase(Edge(X(i), X(j))) > 0) changed = true;
      }
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j)
        for (int k = 0; k < h; ++k) {
          if (i == j || j == k || i == k || !has(Y(j), X(k))) continue;
          for (int z : {X(i), Y(i)}) {
            if (!has(z, X(j)) || has(z, X(k))) continue;
            if (z == X(i) && banned.contains(Edge(z, X(k)))) {
              edges.erase(Edge(z, X(j)));
              banned.emplace(z, X(j));
            } else {
              edges.emplace(z, X(k));
            }
            changed = true;
          }
        }
  }

  std::uniform_int_distribution<long> weight(1, params.max_weight);
  EdgeWeighting w;
  for (const Edge& e : edges) w.emplace(e, weight(rng));

  VWCLabeling lab;
  for (int i = 0; i < h; ++i) {
    lab.x.push_back(X(i));
    lab.y.push_back(Y(i));
  }
  LabeledGraph g(n, std::vector<Edge>(edges.begin(), edges.end()));
  if (!check_vwc_characterization(g, lab).verdict())
    throw std::logic_error("random_weighted_vwc produced a graph that is not very well-covered");
  return WeightedVWCGraph(std::move(g), std::move(lab), std::move(w));
}

}  // namespace vwc
