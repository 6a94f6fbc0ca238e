#include "vwc/criteria.hpp"

#include <algorithm>
#include <sstream>

#include "vwc/errors.hpp"
#include "vwc/primes.hpp"
#include "vwc/simplicial.hpp"

namespace vwc {

namespace {

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << "clause " << v.clause;
  if (!v.indices.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << v.indices[i];
    os << ")";
  }
  if (!v.note.empty()) os << " " << v.note;
  return os.str();
}

void require_vwc(const LabeledGraph& g, const VWCLabeling& lab) {
  const auto r = check_vwc_characterization(g, lab);
  if (!r.verdict())
    throw InputError("graph is not very well-covered under the given labeling: " +
                     describe(r.violations().front()));
}

std::string wname(const VWCLabeling& lab, int a, int b) {
  return "w(" + role_name(lab, a) + role_name(lab, b) + ")";
}

// Records the failure of w(a1 b1) <= w(a2 b2).
void check_le(CriterionReport& report, const WeightedVWCGraph& gw, const std::string& clause,
              std::vector<int> indices, std::vector<std::string> vertices, int a1, int b1, int a2, int b2) {
  const long lhs = gw.weight(a1, b1), rhs = gw.weight(a2, b2);
  if (lhs <= rhs) return;
  const auto& lab = gw.labeling();
  Violation v;
  v.clause = clause;
  v.indices = std::move(indices);
  v.vertices = std::move(vertices);
  v.weights = {lhs, rhs};
  v.note = wname(lab, a1, b1) + "=" + std::to_string(lhs) + " > " + wname(lab, a2, b2) + "=" +
           std::to_string(rhs);
  report.add(std::move(v));
}

}  // namespace

CriterionReport unmixed_criterion_vwc(const WeightedVWCGraph& gw) {
  const LabeledGraph& g = gw.graph();
  const auto& lab = gw.labeling();
  require_vwc(g, lab);
  const int h = gw.half_order();
  auto name = [&](int v) { return role_name(lab, v); };
  CriterionReport report;

  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      if (i == j) continue;
      for (int z : {gw.x(j), gw.y(j)}) {
        if (!g.adjacent(gw.x(i), z)) continue;
        const std::vector<std::string> verts{name(gw.x(i)), name(z)};
        check_le(report, gw, "(i)", {i + 1, j + 1}, verts, gw.x(i), z, gw.x(i), gw.y(i));
        check_le(report, gw, "(i)", {i + 1, j + 1}, verts, gw.x(i), z, gw.x(j), gw.y(j));
      }
    }

  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      if (j == i) continue;
      for (int k = 0; k < h; ++k) {
        if (k == j || !g.adjacent(gw.y(j), gw.x(k))) continue;
        for (int z : {gw.x(i), gw.y(i)}) {
          if (k == i && z != gw.y(i)) continue;
          if (!g.adjacent(z, gw.x(j))) continue;
          const std::vector<std::string> verts{name(z), name(gw.x(j)), name(gw.y(j)), name(gw.x(k))};
          if (!g.adjacent(z, gw.x(k))) {
            Violation v;
            v.clause = "structural";
            v.indices = {i + 1, j + 1, k + 1};
            v.vertices = verts;
            v.note = name(z) + name(gw.x(k)) + " is not an edge";
            report.add(std::move(v));
            continue;
          }
          check_le(report, gw, "(ii)", {i + 1, j + 1, k + 1}, verts, z, gw.x(k), z, gw.x(j));
          check_le(report, gw, "(ii)", {i + 1, j + 1, k + 1}, verts, z, gw.x(k), gw.y(j), gw.x(k));
        }
      }
    }
  return report;
}

CriterionReport four_cycle_weight_property(const WeightedVWCGraph& gw) {
  if (!unmixed_criterion_vwc(gw).verdict())
    throw InputError("four-cycle weight property needs a weighting that passes the unmixed criterion");
  const LabeledGraph& g = gw.graph();
  const auto& lab = gw.labeling();
  CriterionReport report;
  for (int i = 0; i < gw.half_order(); ++i)
    for (int j = i + 1; j < gw.half_order(); ++j) {
      if (!g.adjacent(gw.x(i), gw.y(j)) || !g.adjacent(gw.x(j), gw.y(i))) continue;
      const std::vector<long> w{gw.weight(gw.x(i), gw.y(i)), gw.weight(gw.x(j), gw.y(j)),
                                gw.weight(gw.x(i), gw.y(j)), gw.weight(gw.x(j), gw.y(i))};
      if (std::all_of(w.begin(), w.end(), [&](long v) { return v == w.front(); })) continue;
      Violation v;
      v.clause = "four-cycle";
      v.indices = {i + 1, j + 1};
      v.vertices = {role_name(lab, gw.x(i)), role_name(lab, gw.y(i)), role_name(lab, gw.x(j)),
                    role_name(lab, gw.y(j))};
      v.weights = w;
      v.note = "weights of x_iy_i, x_jy_j, x_iy_j, x_jy_i differ";
      report.add(std::move(v));
    }
  return report;
}

CriterionReport cm_criterion_vwc(const LabeledGraph& g, const VWCLabeling& lab) {
  require_vwc(g, lab);
  const auto ordered = doublestar_relabeling(g, lab);
  if (!ordered) {
    Violation v;
    v.clause = "(**)";
    for (int p : cross_edge_cycle(g, lab)) {
      v.indices.push_back(p + 1);
      v.vertices.push_back(role_name(lab, lab.x[p]));
    }
    v.note = "cross edges x_iy_j form a directed cycle of pair indices; no order with i <= j";
    return CriterionReport({v});
  }
  return check_vwc_characterization(g, *ordered);
}

CriterionReport cm_criterion_vwc(const LabeledGraph& g) {
  if (!is_very_well_covered(g)) throw InputError("graph is not very well-covered");
  return cm_criterion_vwc(g, star_labeling(g));
}

CriterionReport cm_weighted_vwc(const WeightedVWCGraph& gw) {
  const auto base = cm_criterion_vwc(gw.graph(), gw.labeling());
  if (!base.verdict())
    throw InputError("base graph is not Cohen-Macaulay (" + describe(base.violations().front()) +
                     "); see the unweighted CM criterion");
  return unmixed_criterion_vwc(gw);
}

bool is_bipartite(const LabeledGraph& g) {
  std::vector<int> colour(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      bool ok = true;
      for_each_index(g.neighbors(u), [&](int v) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          stack.push_back(v);
        } else if (colour[v] == colour[u]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

CriterionReport bipartite_corollary_check(const LabeledGraph& g, const EdgeWeighting& w) {
  if (!is_bipartite(g)) throw InputError("graph is not bipartite");
  if (!is_very_well_covered(g)) throw InputError("bipartite graph is not unmixed, hence not Cohen-Macaulay");
  const auto lab = star_labeling(g);
  const auto base = cm_criterion_vwc(g, lab);
  if (!base.verdict())
    throw InputError("bipartite graph is not Cohen-Macaulay (" + describe(base.violations().front()) + ")");
  return cm_weighted_vwc(WeightedVWCGraph(g, lab, w));
}

std::optional<std::uint64_t> CampaignSummary::first_failing_seed() const {
  if (failures.empty()) return std::nullopt;
  return failures.front().seed;
}

CampaignSummary cross_validate(const Campaign& c) {
  if (c.h_min < 1 || c.h_max < c.h_min) throw InputError("campaign: need 1 <= h_min <= h_max");
  if (c.w_max < 1) throw InputError("campaign: w_max must be >= 1");
  CampaignSummary s;
  const int span = c.h_max - c.h_min + 1;
  for (int k = 0; k < c.count; ++k) {
    const std::uint64_t seed = instance_seed(c, k);
    const int h = c.h_min + k % span;
    const auto gw = random_weighted_vwc({h, c.edge_density, c.w_max, seed});
    auto fail = [&](std::string check, std::string detail) {
      s.failures.push_back({seed, h, std::move(check), std::move(detail)});
    };
    ++s.instances;

    const MonomialIdeal ideal = weighted_edge_ideal(gw);
    const auto crit = unmixed_criterion_vwc(gw);
    CriterionReport brute;
    try {
      brute = is_unmixed(ideal, c.limits);
    } catch (const ResourceLimitError&) {
      ++s.skipped;
      continue;
    }
    if (crit.verdict()) ++s.criterion_unmixed;
    if (crit.verdict() != brute.verdict()) {
      ++s.unmixed_mismatches;
      fail("unmixed", "criterion " + std::to_string(crit.verdict()) + ", brute force " +
                          std::to_string(brute.verdict()));
    }

    if (crit.verdict()) {
      ++s.four_cycle_checked;
      const auto fc = four_cycle_weight_property(gw);
      if (!fc.verdict()) {
        ++s.four_cycle_violations;
        fail("four-cycle", describe(fc.violations().front()));
      }
    }

    const auto ordered = doublestar_relabeling(gw.graph(), gw.labeling());
    if (!ordered) continue;
    ++s.cm_base;
    const auto reisner = is_cm_reisner(ideal, FieldSpec(0), c.limits);
    if (reisner.verdict() != crit.verdict()) {
      ++s.cm_mismatches;
      fail("cm", "criterion " + std::to_string(crit.verdict()) + ", Reisner " +
                     std::to_string(reisner.verdict()));
    }

    if (!crit.verdict()) continue;
    const WeightedVWCGraph base(gw.graph(), *ordered, gw.weights());
    for (int i = 1; i <= h; ++i) {
      if (o_i_neighbourhood(base, i).empty()) continue;
      ++s.oi_checked;
      std::optional<WeightedVWCGraph> next;
      try {
        next = o_i_operator(base, i);
      } catch (const StructuralConflict&) {
        ++s.oi_conflicts;
        continue;
      }
      const std::string tag = "O_" + std::to_string(i);
      const auto vwc = check_vwc_characterization(next->graph(), next->labeling());
      if (!vwc.verdict()) {
        ++s.oi_violations;
        fail("o_i", tag + " result is not very well-covered: " + describe(vwc.violations().front()));
        continue;
      }
      const bool after = unmixed_criterion_vwc(*next).verdict();
      const bool after_brute = is_unmixed(weighted_edge_ideal(*next), c.limits).verdict();
      if (!after || !after_brute) {
        ++s.oi_violations;
        fail("o_i", tag + " lost unmixedness (criterion " + std::to_string(after) + ", brute force " +
                        std::to_string(after_brute) + ")");
      }
    }
  }
  return s;
}

}  // namespace vwc
