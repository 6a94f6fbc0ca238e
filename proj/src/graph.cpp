#include "vwc/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

#include "vwc/errors.hpp"

namespace vwc {

namespace {

std::string edge_str(const Edge& e) {
  std::ostringstream os;
  os << "[" << e.u << "," << e.v << "]";
  return os.str();
}

}  // namespace

LabeledGraph::LabeledGraph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0 || n > kMaxVars)
    throw InputError("vertex count " + std::to_string(n) + " outside [0, 64]");
  adj_.assign(n, 0);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    const std::string where = "edge #" + std::to_string(k) + " " + edge_str(e);
    if (e.u < 0 || e.v >= n) throw InputError(where + ": endpoint out of range");
    if (e.u == e.v) throw InputError(where + ": loop");
    if (adjacent(e.u, e.v)) throw InputError(where + ": duplicate edge");
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
    edges_.push_back(e);
  }
  for (int v = 0; v < n; ++v)
    if (adj_[v] == 0) throw InputError("vertex " + std::to_string(v) + " is isolated");
  std::sort(edges_.begin(), edges_.end());
}

void validate_labeling(const LabeledGraph& g, const VWCLabeling& lab) {
  const int h = lab.half_order();
  if (lab.y.size() != lab.x.size())
    throw InputError("labeling: x and y have different lengths");
  if (2 * h != g.order())
    throw InputError("labeling: 2h = " + std::to_string(2 * h) + " but graph has " +
                     std::to_string(g.order()) + " vertices");
  VarSet seen = 0;
  auto mark = [&](int v, const char* side) {
    if (v < 0 || v >= g.order())
      throw InputError(std::string("labeling: ") + side + " vertex " + std::to_string(v) +
                       " out of range");
    if (contains(seen, v))
      throw InputError("labeling: vertex " + std::to_string(v) + " used twice");
    seen |= bit(v);
  };
  for (int p = 0; p < h; ++p) {
    mark(lab.x[p], "x");
    mark(lab.y[p], "y");
  }
  for (int p = 0; p < h; ++p) {
    if (!g.adjacent(lab.x[p], lab.y[p]))
      throw InputError("labeling: x" + std::to_string(p + 1) + "y" + std::to_string(p + 1) +
                       " is not an edge");
  }
  for (int p = 0; p < h; ++p)
    for (int q = p + 1; q < h; ++q)
      if (g.adjacent(lab.y[p], lab.y[q]))
        throw InputError("labeling: y" + std::to_string(p + 1) + "y" + std::to_string(q + 1) +
                         " is an edge, Y must be independent");
}

void validate_weighting(const LabeledGraph& g, const EdgeWeighting& w) {
  for (const auto& [e, val] : w) {
    if (!g.has_edge(e)) throw InputError("weight on non-edge " + edge_str(e));
    if (val < 1 || val > kMaxExponent)
      throw InputError("weight " + std::to_string(val) + " on edge " + edge_str(e) +
                       " outside [1, 65536]");
  }
  for (const Edge& e : g.edges())
    if (!w.contains(e)) throw InputError("edge " + edge_str(e) + " has no weight");
}

WeightedVWCGraph::WeightedVWCGraph(LabeledGraph graph, VWCLabeling labeling, EdgeWeighting weights)
    : graph_(std::move(graph)), labeling_(std::move(labeling)), weights_(std::move(weights)) {
  validate_labeling(graph_, labeling_);
  validate_weighting(graph_, weights_);
}

VertexWeightedOrientedGraph::VertexWeightedOrientedGraph(int n, std::vector<Arc> arcs,
                                                         std::vector<long> vertex_weights)
    : n_(n), arcs_(std::move(arcs)), weights_(std::move(vertex_weights)) {
  if (n < 0 || n > kMaxVars)
    throw InputError("vertex count " + std::to_string(n) + " outside [0, 64]");
  if (static_cast<int>(weights_.size()) != n)
    throw InputError("expected " + std::to_string(n) + " vertex weights, got " +
                     std::to_string(weights_.size()));
  std::set<Edge> seen;
  VarSet touched = 0;
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    const Arc& a = arcs_[k];
    const std::string where = "arc #" + std::to_string(k) + " (" + std::to_string(a.from) +
                              "," + std::to_string(a.to) + ")";
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n)
      throw InputError(where + ": endpoint out of range");
    if (a.from == a.to) throw InputError(where + ": loop");
    if (!seen.insert(Edge(a.from, a.to)).second)
      throw InputError(where + ": underlying edge already present");
    touched |= bit(a.from) | bit(a.to);
  }
  for (int v = 0; v < n; ++v) {
    if (!contains(touched, v)) throw InputError("vertex " + std::to_string(v) + " is isolated");
    if (weights_[v] < 1 || weights_[v] > kMaxExponent)
      throw InputError("vertex weight of " + std::to_string(v) + " outside [1, 65536]");
  }
}

LabeledGraph VertexWeightedOrientedGraph::underlying() const {
  std::vector<Edge> edges;
  edges.reserve(arcs_.size());
  for (const Arc& a : arcs_) edges.emplace_back(a.from, a.to);
  return LabeledGraph(n_, edges);
}

std::string role_name(const VWCLabeling& lab, int vertex) {
  for (int p = 0; p < lab.half_order(); ++p) {
    if (lab.x[p] == vertex) return "x" + std::to_string(p + 1);
    if (lab.y[p] == vertex) return "y" + std::to_string(p + 1);
  }
  return "v" + std::to_string(vertex);
}

// --- independent sets ------------------------------------------------------

std::vector<std::vector<int>> maximal_independent_sets(const LabeledGraph& g) {
  const int n = g.order();
  if (n > kMaxIndependentSetVertices)
    throw ResourceLimitError("maximal independent set enumeration is capped at 32 vertices, got " +
                             std::to_string(n));
  const VarSet all = full_set(n);
  std::vector<VarSet> comp(n);
  for (int v = 0; v < n; ++v) comp[v] = all & ~g.neighbors(v) & ~bit(v);

  // Bron-Kerbosch with pivoting on the complement graph.
  std::vector<VarSet> found;
  std::function<void(VarSet, VarSet, VarSet)> expand = [&](VarSet r, VarSet p, VarSet x) {
    if (p == 0 && x == 0) {
      found.push_back(r);
      return;
    }
    int pivot = -1, best = -1;
    for_each_index(p | x, [&](int u) {
      int c = count(p & comp[u]);
      if (c > best) best = c, pivot = u;
    });
    for (VarSet cand = p & ~comp[pivot]; cand != 0; cand &= cand - 1) {
      int v = lowest(cand);
      expand(r | bit(v), p & comp[v], x & comp[v]);
      p &= ~bit(v);
      x |= bit(v);
    }
  };
  expand(0, all, 0);

  std::sort(found.begin(), found.end(), lex_less);
  std::vector<std::vector<int>> out;
  out.reserve(found.size());
  for (VarSet s : found) out.push_back(to_indices(s));
  return out;
}

bool is_very_well_covered(const LabeledGraph& g) {
  const int n = g.order();
  if (n == 0 || n % 2 != 0) return false;
  for (const auto& s : maximal_independent_sets(g))
    if (static_cast<int>(s.size()) != n / 2) return false;
  return true;
}

// --- matchings -------------------------------------------------------------

std::optional<std::vector<Edge>> find_split_matching(const LabeledGraph& g, VarSet left) {
  const int n = g.order();
  const VarSet right = full_set(n) & ~left;
  if (count(left) != count(right)) return std::nullopt;
  std::vector<int> match(n, -1);
  VarSet visited = 0;
  std::function<bool(int)> augment = [&](int u) {
    for (VarSet c = g.neighbors(u) & right; c != 0; c &= c - 1) {
      int v = lowest(c);
      if (contains(visited, v)) continue;
      visited |= bit(v);
      if (match[v] < 0 || augment(match[v])) {
        match[v] = u;
        return true;
      }
    }
    return false;
  };
  for (VarSet l = left; l != 0; l &= l - 1) {
    visited = 0;
    if (!augment(lowest(l))) return std::nullopt;
  }
  std::vector<Edge> out;
  for_each_index(right, [&](int v) { out.emplace_back(match[v], v); });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::optional<VarSet> two_colouring(const LabeledGraph& g) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  VarSet left = 0;
  for (int s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (colour[u] == 0) left |= bit(u);
      for (VarSet c = g.neighbors(u); c != 0; c &= c - 1) {
        int v = lowest(c);
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          q.push(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return left;
}

constexpr int kExhaustiveMatchingCap = 20;

}  // namespace

std::optional<std::vector<Edge>> find_perfect_matching(const LabeledGraph& g) {
  const int n = g.order();
  if (n % 2 != 0) return std::nullopt;
  if (auto left = two_colouring(g)) return find_split_matching(g, *left);

  if (n > kExhaustiveMatchingCap)
    throw ResourceLimitError("perfect matching search on non-bipartite graphs is capped at 20 vertices");
  std::unordered_set<VarSet> dead;
  std::vector<Edge> chosen;
  std::function<bool(VarSet)> search = [&](VarSet free) {
    if (free == 0) return true;
    if (dead.contains(free)) return false;
    int u = lowest(free);
    for (VarSet c = g.neighbors(u) & free; c != 0; c &= c - 1) {
      int v = lowest(c);
      chosen.emplace_back(u, v);
      if (search(free & ~bit(u) & ~bit(v))) return true;
      chosen.pop_back();
    }
    dead.insert(free);
    return false;
  };
  if (!search(full_set(n))) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

// --- labelings -------------------------------------------------------------

VWCLabeling star_labeling(const LabeledGraph& g) {
  if (!is_very_well_covered(g)) throw InputError("graph is not very well-covered");
  const VarSet all = full_set(g.order());
  for (const auto& yset : maximal_independent_sets(g)) {
    const VarSet y = from_indices(yset);
    auto m = find_split_matching(g, all & ~y);
    if (!m) continue;
    VWCLabeling lab;
    // find_split_matching sorts by the smaller endpoint; re-sort by x.
    std::vector<std::pair<int, int>> pairs;
    for (const Edge& e : *m) {
      int xv = contains(y, e.u) ? e.v : e.u;
      int yv = contains(y, e.u) ? e.u : e.v;
      pairs.emplace_back(xv, yv);
    }
    std::sort(pairs.begin(), pairs.end());
    for (auto [xv, yv] : pairs) {
      lab.x.push_back(xv);
      lab.y.push_back(yv);
    }
    return lab;
  }
  throw InputError("no maximal independent set admits a perfect matching to its complement");
}

CriterionReport check_vwc_characterization(const LabeledGraph& g, const VWCLabeling& lab) {
  validate_labeling(g, lab);
  const int h = lab.half_order();
  const auto& X = lab.x;
  const auto& Y = lab.y;
  CriterionReport report;
  auto name = [&](int v) { return role_name(lab, v); };
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      if (j == i) continue;
      for (int k = 0; k < h; ++k) {
        if (k == i || k == j || !g.adjacent(Y[j], X[k])) continue;
        for (int z : {X[i], Y[i]}) {
          if (g.adjacent(z, X[j]) && !g.adjacent(z, X[k])) {
            Violation v;
            v.clause = "(i)";
            v.indices = {i + 1, j + 1, k + 1};
            v.vertices = {name(z), name(X[j]), name(Y[j]), name(X[k])};
            v.note = z == X[i] ? "z=x" : "z=y";
            report.add(std::move(v));
          }
        }
      }
    }
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      if (i != j && g.adjacent(X[i], Y[j]) && g.adjacent(X[i], X[j])) {
        Violation v;
        v.clause = "(ii)";
        v.indices = {i + 1, j + 1};
        v.vertices = {name(X[i]), name(Y[j]), name(X[j])};
        report.add(std::move(v));
      }
    }
  return report;
}

std::optional<VWCLabeling> doublestar_relabeling(const LabeledGraph& g, const VWCLabeling& lab) {
  validate_labeling(g, lab);
  const int h = lab.half_order();
  std::vector<int> indeg(h, 0);
  std::vector<std::vector<int>> out(h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      if (i != j && g.adjacent(lab.x[i], lab.y[j])) {
        out[i].push_back(j);
        ++indeg[j];
      }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 0; i < h; ++i)
    if (indeg[i] == 0) ready.push(i);
  VWCLabeling result;
  while (!ready.empty()) {
    int i = ready.top();
    ready.pop();
    result.x.push_back(lab.x[i]);
    result.y.push_back(lab.y[i]);
    for (int j : out[i])
      if (--indeg[j] == 0) ready.push(j);
  }
  if (result.half_order() != h) return std::nullopt;
  return result;
}

std::vector<int> cross_edge_cycle(const LabeledGraph& g, const VWCLabeling& lab) {
  const int h = lab.half_order();
  std::vector<int> state(h, 0), parent(h, -1);
  std::vector<int> cycle;
  std::function<bool(int)> dfs = [&](int i) {
    state[i] = 1;
    for (int j = 0; j < h; ++j) {
      if (j == i || !g.adjacent(lab.x[i], lab.y[j])) continue;
      if (state[j] == 1) {
        for (int c = i; c != j; c = parent[c]) cycle.push_back(c);
        cycle.push_back(j);
        std::reverse(cycle.begin(), cycle.end());
        return true;
      }
      if (state[j] == 0) {
        parent[j] = i;
        if (dfs(j)) return true;
      }
    }
    state[i] = 2;
    return false;
  };
  for (int i = 0; i < h; ++i)
    if (state[i] == 0 && dfs(i)) break;
  return cycle;
}

// --- O_i -------------------------------------------------------------------

std::vector<int> o_i_neighbourhood(const WeightedVWCGraph& gw, int pair) {
  const int h = gw.half_order();
  if (pair < 1 || pair > h)
    throw InputError("pair index " + std::to_string(pair) + " outside [1, " + std::to_string(h) + "]");
  const int p = pair - 1;
  std::vector<int> out;
  for (int k = 0; k < h; ++k)
    if (k != p && gw.graph().adjacent(gw.x(k), gw.y(p))) out.push_back(k + 1);
  return out;
}

WeightedVWCGraph o_i_operator(const WeightedVWCGraph& gw, int pair) {
  const auto nbrs = o_i_neighbourhood(gw, pair);
  const int p = pair - 1;
  const LabeledGraph& g = gw.graph();
  EdgeWeighting w = gw.weights();
  for (int k1 : nbrs) {
    const int k = k1 - 1;
    if (g.adjacent(gw.x(k), gw.x(p)))
      throw StructuralConflict("O_" + std::to_string(pair) + ": x" + std::to_string(k + 1) + "x" +
                               std::to_string(pair) + " is already an edge");
    const long moved = w.at(Edge(gw.x(k), gw.y(p)));
    w.erase(Edge(gw.x(k), gw.y(p)));
    w.emplace(Edge(gw.x(k), gw.x(p)), moved);
  }
  std::vector<Edge> edges;
  edges.reserve(w.size());
  for (const auto& [e, val] : w) edges.push_back(e);
  return WeightedVWCGraph(LabeledGraph(g.order(), edges), gw.labeling(), std::move(w));
}

}  // namespace vwc
