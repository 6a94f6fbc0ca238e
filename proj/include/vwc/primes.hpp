#pragma once

#include <span>
#include <vector>

#include "vwc/monomial.hpp"
#include "vwc/report.hpp"
#include "vwc/varset.hpp"

namespace vwc {

/// All inclusion-minimal sets meeting every edge, in lexicographic order of
/// their ascending index lists. No edges gives {∅}; an empty edge gives none.
std::vector<VarSet> minimal_transversals(std::span<const VarSet> edges);

/// Size of a smallest transversal, -1 if an edge is empty.
int min_transversal_size(std::span<const VarSet> edges);

/// Minimal primes of a squarefree monomial ideal, as variable sets.
struct PrimeList {
  std::vector<VarSet> primes;

  std::vector<int> heights() const;
  bool equicardinal() const;
};

/// Throws InputError on a non-squarefree ideal; polarize first.
PrimeList minimal_primes(const MonomialIdeal& ideal);

/// Height of any monomial ideal, read off its polarization.
int height(const MonomialIdeal& ideal);

/// nvars - height.
int krull_dim(const MonomialIdeal& ideal);

/// Unmixedness through the polarization. On failure the report carries a
/// smallest and a largest minimal prime of the polarized ideal, named x{i}_{k}.
CriterionReport is_unmixed(const MonomialIdeal& ideal, const Limits& limits = {});

}  // namespace vwc
