#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "vwc/criteria.hpp"
#include "vwc/errors.hpp"
#include "vwc/primes.hpp"
#include "vwc/simplicial.hpp"

using namespace vwc;
using oracle::role_graph;
using oracle::role_weighted;

namespace {

WeightedVWCGraph p4(long x1y1, long x1x2, long x2y2) {
  return role_weighted(2, {{"x1y1", x1y1}, {"x1x2", x1x2}, {"x2y2", x2y2}});
}

WeightedVWCGraph k22(long x1y1, long x2y2, long x1y2, long x2y1) {
  return role_weighted(2, {{"x1y1", x1y1}, {"x2y2", x2y2}, {"x1y2", x1y2}, {"x2y1", x2y1}});
}

bool has_clause(const CriterionReport& r, const std::string& clause, const std::vector<int>& idx) {
  return std::any_of(r.violations().begin(), r.violations().end(),
                     [&](const Violation& v) { return v.clause == clause && v.indices == idx; });
}

WeightedVWCGraph with_labeling(const WeightedVWCGraph& gw, const VWCLabeling& lab) {
  return WeightedVWCGraph(gw.graph(), lab, gw.weights());
}

/// The same weighted graph with vertices renamed by `perm`.
WeightedVWCGraph permuted(const WeightedVWCGraph& gw, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  EdgeWeighting w;
  for (const auto& [e, wt] : gw.weights()) {
    const Edge f(perm[e.u], perm[e.v]);
    edges.push_back(f);
    w[f] = wt;
  }
  VWCLabeling lab;
  for (int p = 0; p < gw.half_order(); ++p) {
    lab.x.push_back(perm[gw.x(p)]);
    lab.y.push_back(perm[gw.y(p)]);
  }
  return WeightedVWCGraph(LabeledGraph(gw.graph().order(), edges), lab, w);
}

}  // namespace

TEST_CASE("unmixed criterion on weighted paths and K2,2") {
  CHECK(unmixed_criterion_vwc(p4(2, 1, 3)).verdict());

  const CriterionReport dominated = unmixed_criterion_vwc(p4(1, 2, 1));
  REQUIRE_FALSE(dominated.verdict());
  CHECK(has_clause(dominated, "(i)", {1, 2}));
  CHECK(dominated.violations().front().note == "w(x1x2)=2 > w(x1y1)=1");
  CHECK_FALSE(is_unmixed(weighted_edge_ideal(p4(1, 2, 1))).verdict());

  const CriterionReport heavy_cross = unmixed_criterion_vwc(k22(1, 1, 2, 1));
  REQUIRE_FALSE(heavy_cross.verdict());
  CHECK(heavy_cross.violations().front().note == "w(x1y2)=2 > w(x1y1)=1");
  CHECK_FALSE(is_unmixed(weighted_edge_ideal(k22(1, 1, 2, 1))).verdict());
}

TEST_CASE("clause (ii) with i = k and z = y_i") {
  // Only the i = k case sees the heavy matching edge x1y1 inside K2,2.
  const auto gw = k22(2, 1, 1, 1);
  const CriterionReport r = unmixed_criterion_vwc(gw);
  REQUIRE_FALSE(r.verdict());
  CHECK(has_clause(r, "(ii)", {1, 2, 1}));
  CHECK_FALSE(has_clause(r, "(i)", {1, 2}));
  CHECK_FALSE(is_unmixed(weighted_edge_ideal(gw)).verdict());
}

TEST_CASE("unmixed criterion rejects graphs that are not very well-covered") {
  const auto gw = role_weighted(3, {{"x1y1", 1}, {"x2y2", 1}, {"x3y3", 1}, {"x1x2", 1}, {"y2x3", 1}});
  CHECK_THROWS_AS(unmixed_criterion_vwc(gw), InputError);
}

TEST_CASE("four-cycle weight property") {
  CHECK(four_cycle_weight_property(k22(3, 3, 3, 3)).verdict());
  CHECK(four_cycle_weight_property(p4(2, 1, 3)).verdict());
  CHECK_THROWS_AS(four_cycle_weight_property(k22(1, 1, 2, 1)), InputError);
}

TEST_CASE("Cohen-Macaulay criterion for very well-covered graphs") {
  CHECK(cm_criterion_vwc(LabeledGraph(4, {{0, 1}, {1, 2}, {2, 3}})).verdict());

  const LabeledGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const CriterionReport r = cm_criterion_vwc(c4);
  REQUIRE_FALSE(r.verdict());
  CHECK(r.violations().front().clause == "(**)");
  CHECK(r.violations().front().indices.size() == 2);
  CHECK_FALSE(is_cm_reisner(edge_ideal(c4), FieldSpec{}).verdict());

  CHECK(cm_criterion_vwc(role_graph(3, {"x1y1", "x2y2", "x3y3"})).verdict());
  CHECK_THROWS_AS(cm_criterion_vwc(LabeledGraph(3, {{0, 1}, {1, 2}, {0, 2}})), InputError);
}

TEST_CASE("Cohen-Macaulay criterion for weighted graphs") {
  CHECK(cm_weighted_vwc(p4(2, 1, 3)).verdict());
  CHECK(is_cm_reisner(weighted_edge_ideal(p4(2, 1, 3)), FieldSpec{}).verdict());
  CHECK_FALSE(cm_weighted_vwc(p4(1, 2, 1)).verdict());
  CHECK(cm_weighted_vwc(role_weighted(1, {{"x1y1", 5}})).verdict());
  CHECK_THROWS_AS(cm_weighted_vwc(k22(1, 1, 1, 1)), InputError);
}

TEST_CASE("bipartite corollary") {
  const LabeledGraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(bipartite_corollary_check(path, {{Edge(0, 1), 2}, {Edge(1, 2), 1}, {Edge(2, 3), 3}}).verdict());
  const LabeledGraph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EdgeWeighting ones;
  for (const Edge& e : c4.edges()) ones[e] = 1;
  CHECK_THROWS_AS(bipartite_corollary_check(c4, ones), InputError);
  CHECK(bipartite_corollary_check(LabeledGraph(2, {{0, 1}}), {{Edge(0, 1), 4}}).verdict());
  const LabeledGraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_FALSE(is_bipartite(tri));
  CHECK_THROWS_AS(bipartite_corollary_check(tri, {{Edge(0, 1), 1}, {Edge(1, 2), 1}, {Edge(0, 2), 1}}),
                  InputError);
}

TEST_CASE("criteria agree with the algebraic oracles on random graphs") {
  int cm_bases = 0;
  for (std::uint64_t seed = 1000; seed < 1300; ++seed) {
    const int h = 1 + static_cast<int>(seed % 4);
    const auto gw = random_weighted_vwc({h, 0.45, 3, seed});
    const MonomialIdeal ideal = weighted_edge_ideal(gw);
    if (oracle::polarize(ideal).nvars > 14) continue;
    const auto primes = oracle::minimal_transversals(oracle::polarize(ideal).nvars, oracle::polarize(ideal).gens);
    const bool unmixed = std::all_of(primes.begin(), primes.end(),
                                     [&](VarSet p) { return count(p) == count(primes.front()); });
    const bool verdict = unmixed_criterion_vwc(gw).verdict();
    CHECK(verdict == unmixed);
    if (verdict) CHECK(four_cycle_weight_property(gw).verdict());
    if (cm_criterion_vwc(gw.graph(), gw.labeling()).verdict() && oracle::polarize(ideal).nvars <= 11) {
      ++cm_bases;
      CHECK(verdict == oracle::survey(ideal).cm);
      CHECK(cm_weighted_vwc(gw).verdict() == verdict);
    }
  }
  CHECK(cm_bases > 20);
}

TEST_CASE("constant weights give the verdicts of the unweighted graph") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto base = random_weighted_vwc({1 + static_cast<int>(seed % 4), 0.5, 1, seed});
    EdgeWeighting three = base.weights();
    for (auto& [e, w] : three) w = 3;
    const WeightedVWCGraph scaled(base.graph(), base.labeling(), three);
    CHECK(unmixed_criterion_vwc(scaled).verdict() == unmixed_criterion_vwc(base).verdict());
    CHECK(is_unmixed(weighted_edge_ideal(scaled)).verdict() == is_unmixed(edge_ideal(base.graph())).verdict());
    const bool cm_base = cm_criterion_vwc(base.graph()).verdict();
    if (cm_base) CHECK(cm_weighted_vwc(scaled).verdict());
    if (polarize(weighted_edge_ideal(scaled)).ideal.nvars() <= 16)
      CHECK(is_cm_reisner(weighted_edge_ideal(scaled), FieldSpec{}).verdict() == cm_base);
  }
}

TEST_CASE("criteria are invariant under relabeling") {
  std::mt19937_64 rng(31);
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int h = 1 + static_cast<int>(seed % 4);
    const auto gw = random_weighted_vwc({h, 0.5, 3, seed});
    std::vector<int> perm(2 * h);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto moved = permuted(gw, perm);
    CHECK(cm_criterion_vwc(moved.graph()).verdict() == cm_criterion_vwc(gw.graph()).verdict());
    CHECK(unmixed_criterion_vwc(moved).verdict() == unmixed_criterion_vwc(gw).verdict());
    const bool verdict = unmixed_criterion_vwc(gw).verdict();
    for (const auto& lab : oracle::all_star_labelings(gw.graph()))
      CHECK(unmixed_criterion_vwc(with_labeling(gw, lab)).verdict() == verdict);
  }
}

TEST_CASE("cross-validation campaign") {
  const CampaignSummary s = cross_validate(Campaign{});
  CHECK(s.instances == 500);
  CHECK(s.clean());
  CHECK(s.unmixed_mismatches == 0);
  CHECK(s.cm_mismatches == 0);
  CHECK(s.oi_violations == 0);
  CHECK(s.four_cycle_violations == 0);
  CHECK(s.cm_base > 0);
  CHECK_FALSE(s.first_failing_seed().has_value());

  Campaign tiny;
  tiny.count = 30;
  tiny.h_min = tiny.h_max = 1;
  const CampaignSummary t = cross_validate(tiny);
  CHECK(t.clean());
  CHECK(t.criterion_unmixed == 30);

  Campaign again;
  again.count = 50;
  const CampaignSummary a = cross_validate(again), b = cross_validate(again);
  CHECK(a.criterion_unmixed == b.criterion_unmixed);
  CHECK(a.cm_base == b.cm_base);
  CHECK(a.oi_checked == b.oi_checked);
}
