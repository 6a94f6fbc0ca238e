#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vwc/chain.hpp"
#include "vwc/graph.hpp"
#include "vwc/monomial.hpp"
#include "vwc/report.hpp"

namespace vwc {

/// Weight inequalities deciding unmixedness of I(G_w) for a very well-covered
/// G under a (*) labeling. Clause (i): w(x_i z_j) <= w(x_i y_i), w(x_j y_j).
/// Clause (ii): w(z_i x_k) <= w(z_i x_j), w(y_j x_k) whenever z_i x_j and
/// y_j x_k are edges, for distinct i, j, k or for i = k != j with z_i = y_i.
/// Throws InputError when the graph is not very well-covered.
CriterionReport unmixed_criterion_vwc(const WeightedVWCGraph& gw);

/// x_i y_j, x_j y_i in E forces w(x_i y_i) = w(x_j y_j) = w(x_i y_j) = w(x_j y_i).
/// Throws InputError unless the unmixed criterion holds.
CriterionReport four_cycle_weight_property(const WeightedVWCGraph& gw);

/// Cohen-Macaulayness of a very well-covered graph: a (**) order must exist,
/// and the (*) clauses must hold under it. A missing order is reported as a
/// "(**)" violation carrying a cross-edge cycle. Throws InputError when G is
/// not very well-covered.
CriterionReport cm_criterion_vwc(const LabeledGraph& g);
CriterionReport cm_criterion_vwc(const LabeledGraph& g, const VWCLabeling& lab);

/// For a Cohen-Macaulay very well-covered base, CM of I(G_w) is unmixedness.
/// Throws InputError when the base graph is not CM.
CriterionReport cm_weighted_vwc(const WeightedVWCGraph& gw);

/// The same decision for a bipartite base, deriving the (*) labeling first.
/// Throws InputError when G is not bipartite or not Cohen-Macaulay.
CriterionReport bipartite_corollary_check(const LabeledGraph& g, const EdgeWeighting& w);

bool is_bipartite(const LabeledGraph& g);

struct Campaign {
  int count = 500;
  int h_min = 1;
  int h_max = 4;
  long w_max = 3;
  double edge_density = 0.4;
  std::uint64_t seed = 1;
  Limits limits;
};

/// One instance that broke an expected equivalence.
struct CampaignFailure {
  std::uint64_t seed = 0;
  int half_order = 0;
  std::string check;
  std::string detail;
};

struct CampaignSummary {
  int instances = 0;
  int skipped = 0;  ///< over the polarized variable cap
  int criterion_unmixed = 0;
  int unmixed_mismatches = 0;
  int cm_base = 0;
  int cm_mismatches = 0;
  int oi_checked = 0;
  int oi_conflicts = 0;
  int oi_violations = 0;
  int four_cycle_checked = 0;
  int four_cycle_violations = 0;
  std::vector<CampaignFailure> failures;

  std::optional<std::uint64_t> first_failing_seed() const;
  bool clean() const { return failures.empty(); }
};

/// Instance k uses generator seed `seed + k` and half order
/// h_min + k mod (h_max - h_min + 1). For each instance: the criterion
/// against brute-force unmixedness; on a CM base, against Reisner's
/// criterion over the rationals; from unmixed CM-base inputs, O_i for every
/// i with N_i nonempty (under the (**) order) must give a very well-covered
/// graph that is again unmixed; passing instances must have the four-cycle
/// weight property.
CampaignSummary cross_validate(const Campaign& campaign);

/// Seed of instance k in a campaign.
inline std::uint64_t instance_seed(const Campaign& c, int k) { return c.seed + static_cast<std::uint64_t>(k); }

}  // namespace vwc
