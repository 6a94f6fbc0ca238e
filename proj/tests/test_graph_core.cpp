#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vwc/errors.hpp"
#include "vwc/graph.hpp"

using namespace vwc;

namespace {

const LabeledGraph kEdge(2, {{0, 1}});
const LabeledGraph kP4(4, {{0, 1}, {1, 2}, {2, 3}});
const LabeledGraph kTriangle(3, {{0, 1}, {1, 2}, {0, 2}});
const LabeledGraph kC4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});

std::vector<VarSet> as_sets(const std::vector<std::vector<int>>& v) {
  std::vector<VarSet> out;
  for (const auto& s : v) out.push_back(from_indices(s));
  return out;
}

/// Random simple graph without isolated vertices.
std::optional<LabeledGraph> random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) edges.emplace_back(a, b);
  try {
    return LabeledGraph(n, edges);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("graph construction rejects loops, duplicates and isolated vertices") {
  CHECK_THROWS_AS(LabeledGraph(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(LabeledGraph(2, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(LabeledGraph(3, {{0, 1}}), InputError);
  CHECK_THROWS_AS(LabeledGraph(2, {{0, 2}}), InputError);
}

TEST_CASE("maximal independent sets of small graphs") {
  CHECK(as_sets(maximal_independent_sets(kEdge)) == std::vector<VarSet>{0b01, 0b10});
  CHECK(maximal_independent_sets(kP4) == std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 3}});
  CHECK(maximal_independent_sets(kTriangle) == std::vector<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("maximal independent sets match exhaustive enumeration") {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const auto g = random_graph(rng, n, 0.15 + 0.1 * static_cast<double>(rng() % 6));
    if (!g) continue;
    ++checked;
    CHECK(as_sets(maximal_independent_sets(*g)) == oracle::maximal_independent_sets(*g));
    CHECK(is_very_well_covered(*g) == oracle::very_well_covered(*g));
  }
  CHECK(checked > 100);
}

TEST_CASE("independent set enumeration refuses more than 32 vertices") {
  std::vector<Edge> matching;
  for (int i = 0; i < 17; ++i) matching.emplace_back(2 * i, 2 * i + 1);
  CHECK_THROWS_AS(maximal_independent_sets(LabeledGraph(34, matching)), ResourceLimitError);
}

TEST_CASE("very well-covered detection") {
  CHECK(is_very_well_covered(kEdge));
  CHECK(is_very_well_covered(kP4));
  CHECK_FALSE(is_very_well_covered(kTriangle));
  CHECK(is_very_well_covered(kC4));
}

TEST_CASE("perfect matchings") {
  CHECK(find_perfect_matching(kEdge) == std::vector<Edge>{{0, 1}});
  CHECK(find_perfect_matching(kP4) == std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK_FALSE(find_perfect_matching(LabeledGraph(4, {{0, 1}, {0, 2}, {0, 3}})).has_value());
}

TEST_CASE("star labeling takes the lexicographically smallest maximal independent set as Y") {
  const VWCLabeling e = star_labeling(kEdge);
  CHECK(e.x == std::vector<int>{1});
  CHECK(e.y == std::vector<int>{0});

  const VWCLabeling p = star_labeling(kP4);
  CHECK(p.x == std::vector<int>{1, 3});
  CHECK(p.y == std::vector<int>{0, 2});

  const VWCLabeling c = star_labeling(kC4);
  CHECK(from_indices(c.y) == from_indices({0, 2}));
  CHECK(from_indices(c.x) == from_indices({1, 3}));

  CHECK_THROWS_AS(star_labeling(kTriangle), InputError);
}

TEST_CASE("star labeling satisfies the labeling invariants on random very well-covered graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto gw = random_weighted_vwc({1 + static_cast<int>(seed % 5), 0.4, 1, seed});
    const VWCLabeling lab = star_labeling(gw.graph());
    CHECK_NOTHROW(validate_labeling(gw.graph(), lab));
  }
}

TEST_CASE("vwc characterization clauses") {
  CHECK(check_vwc_characterization(kP4, star_labeling(kP4)).verdict());

  // x1y1, x2y2, x1y2, x1x2: the cross edge x1y2 comes with x1x2.
  const auto g2 = oracle::role_graph(2, {"x1y1", "x2y2", "x1y2", "x1x2"});
  const auto r2 = check_vwc_characterization(g2, oracle::identity_labeling(2));
  REQUIRE_FALSE(r2.verdict());
  CHECK(r2.violations().front().clause == "(ii)");
  CHECK(r2.violations().front().indices == std::vector<int>{1, 2});

  // x1x2 and y2x3 force x1x3.
  const auto g3 = oracle::role_graph(3, {"x1y1", "x2y2", "x3y3", "x1x2", "y2x3"});
  const auto r3 = check_vwc_characterization(g3, oracle::identity_labeling(3));
  REQUIRE_FALSE(r3.verdict());
  bool found = false;
  for (const auto& v : r3.violations())
    found = found || (v.clause == "(i)" && v.indices == std::vector<int>{1, 2, 3} && v.note == "z=x");
  CHECK(found);
}

TEST_CASE("vwc characterization agrees with enumeration for every labeling") {
  std::mt19937_64 rng(11);
  int graphs = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int h = 1 + static_cast<int>(rng() % 4);
    const auto g = random_graph(rng, 2 * h, 0.35);
    if (!g) continue;
    const auto labelings = oracle::all_star_labelings(*g);
    if (labelings.empty()) continue;
    ++graphs;
    const bool vwc = oracle::very_well_covered(*g);
    for (const auto& lab : labelings) CHECK(check_vwc_characterization(*g, lab).verdict() == vwc);
  }
  CHECK(graphs > 50);
}

TEST_CASE("double-star relabeling") {
  // x1y1, x2y2, x2y1: the arc 2 -> 1 puts old pair 2 first.
  const auto g = oracle::role_graph(2, {"x1y1", "x2y2", "x2y1"});
  const auto lab = doublestar_relabeling(g, oracle::identity_labeling(2));
  REQUIRE(lab.has_value());
  CHECK(lab->x == std::vector<int>{1, 0});
  CHECK(lab->y == std::vector<int>{3, 2});

  const auto k22 = oracle::role_graph(2, {"x1y1", "x2y2", "x1y2", "x2y1"});
  CHECK_FALSE(doublestar_relabeling(k22, oracle::identity_labeling(2)).has_value());
  CHECK(cross_edge_cycle(k22, oracle::identity_labeling(2)).size() == 2);

  const auto matching = oracle::role_graph(3, {"x1y1", "x2y2", "x3y3"});
  CHECK(doublestar_relabeling(matching, oracle::identity_labeling(3)) == oracle::identity_labeling(3));
}

TEST_CASE("double-star relabeling exists iff some permutation of the pairs works") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int h = 1 + static_cast<int>(seed % 6);
    const auto gw = random_weighted_vwc({h, 0.5, 1, seed});
    const auto lab = doublestar_relabeling(gw.graph(), gw.labeling());
    CHECK(lab.has_value() == oracle::doublestar_order_exists(gw.graph(), gw.labeling()));
    if (!lab) continue;
    for (int a = 0; a < h; ++a)
      for (int b = 0; b < h; ++b)
        if (a != b && gw.graph().adjacent(lab->x[a], lab->y[b])) CHECK(a <= b);
  }
}

TEST_CASE("O_i moves the x_k y_i edges onto x_k x_i") {
  const auto gw = oracle::role_weighted(2, {{"x1y1", 1}, {"x2y2", 3}, {"x2y1", 2}});
  CHECK(o_i_neighbourhood(gw, 1) == std::vector<int>{2});
  const auto out = o_i_operator(gw, 1);
  const auto expected = oracle::role_weighted(2, {{"x1y1", 1}, {"x2y2", 3}, {"x1x2", 2}});
  CHECK(out == expected);

  CHECK(o_i_neighbourhood(gw, 2).empty());
  CHECK(o_i_operator(gw, 2) == gw);
  CHECK_THROWS_AS(o_i_operator(gw, 3), InputError);
}

TEST_CASE("O_i refuses to duplicate an edge") {
  const auto gw = oracle::role_weighted(2, {{"x1y1", 1}, {"x2y2", 1}, {"x2y1", 1}, {"x1x2", 1}});
  CHECK_THROWS_AS(o_i_operator(gw, 1), StructuralConflict);
}

TEST_CASE("repeated O_i terminates with every y_i of degree one") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int h = 1 + static_cast<int>(seed % 5);
    const auto base = random_weighted_vwc({h, 0.5, 3, seed});
    const auto relabeled = doublestar_relabeling(base.graph(), base.labeling());
    if (!relabeled) continue;
    WeightedVWCGraph gw(base.graph(), *relabeled, base.weights());
    const auto degree_sum = [&](const WeightedVWCGraph& g) {
      int s = 0;
      for (int p = 0; p < h; ++p) s += g.graph().degree(g.y(p));
      return s;
    };
    bool progress = true;
    try {
      while (progress) {
        progress = false;
        for (int i = 1; i <= h; ++i) {
          if (o_i_neighbourhood(gw, i).empty()) continue;
          const int before = degree_sum(gw);
          gw = o_i_operator(gw, i);
          CHECK(degree_sum(gw) < before);
          CHECK(gw.graph().order() == 2 * h);
          for (int p = 0; p < h; ++p) CHECK(gw.weight(gw.x(p), gw.y(p)) == base.weight(gw.x(p), gw.y(p)));
          progress = true;
        }
      }
      CHECK(degree_sum(gw) == h);
    } catch (const StructuralConflict&) {
    }
  }
}

TEST_CASE("random very well-covered generator") {
  const auto one = random_weighted_vwc({1, 0.5, 4, 99});
  CHECK(one.graph().size() == 1);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto gw = random_weighted_vwc({3, 0.5, 3, seed});
    CHECK(check_vwc_characterization(gw.graph(), gw.labeling()).verdict());
    CHECK(oracle::very_well_covered(gw.graph()));
    CHECK(gw == random_weighted_vwc({3, 0.5, 3, seed}));
    for (const auto& [e, w] : gw.weights()) CHECK((w >= 1 && w <= 3));
  }
}
