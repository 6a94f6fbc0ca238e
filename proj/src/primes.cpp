#include "vwc/primes.hpp"

#include <algorithm>
#include <functional>

#include "vwc/errors.hpp"

namespace vwc {

namespace {

// Branch-and-reduce enumeration. A branch picks one free vertex of the
// uncovered edge with the fewest free vertices; vertices tried earlier in
// the same branching are forbidden afterwards, so each set is produced at
// most once. Branches where a chosen vertex has lost every private edge, or
// where an uncovered edge has no free vertex left, are cut.
class TransversalSearch {
 public:
  explicit TransversalSearch(std::span<const VarSet> edges) : edges_(edges.begin(), edges.end()) {}

  std::vector<VarSet> enumerate() {
    if (std::any_of(edges_.begin(), edges_.end(), [](VarSet e) { return e == 0; })) return {};
    found_.clear();
    enumerate_from(0, 0);
    std::sort(found_.begin(), found_.end(), lex_less);
    return found_;
  }

  int minimum() {
    if (std::any_of(edges_.begin(), edges_.end(), [](VarSet e) { return e == 0; })) return -1;
    best_ = static_cast<int>(edges_.size()) + 1;
    minimum_from(0, 0);
    return best_;
  }

 private:
  bool has_private_edges(VarSet chosen) const {
    VarSet priv = 0;
    for (VarSet e : edges_) {
      VarSet hit = e & chosen;
      if (hit != 0 && (hit & (hit - 1)) == 0) priv |= hit;
    }
    return priv == chosen;
  }

  // Returns the free part of the most constrained uncovered edge, 0 if
  // everything is covered, or sets `dead` when some edge cannot be covered.
  VarSet pick_branch(VarSet chosen, VarSet forbid, bool& dead) const {
    VarSet best = 0;
    int best_count = 65;
    dead = false;
    for (VarSet e : edges_) {
      if (e & chosen) continue;
      VarSet free = e & ~forbid;
      if (free == 0) {
        dead = true;
        return 0;
      }
      int c = count(free);
      if (c < best_count) best_count = c, best = free;
    }
    return best;
  }

  void enumerate_from(VarSet chosen, VarSet forbid) {
    if (!has_private_edges(chosen)) return;
    bool dead = false;
    VarSet cand = pick_branch(chosen, forbid, dead);
    if (dead) return;
    if (cand == 0) {
      found_.push_back(chosen);
      return;
    }
    for (; cand != 0; cand &= cand - 1) {
      VarSet v = cand & -cand;
      enumerate_from(chosen | v, forbid);
      forbid |= v;
    }
  }

  void minimum_from(VarSet chosen, VarSet forbid) {
    const int size = count(chosen);
    if (size >= best_) return;
    bool dead = false;
    VarSet cand = pick_branch(chosen, forbid, dead);
    if (dead) return;
    if (cand == 0) {
      best_ = size;
      return;
    }
    if (size + 1 >= best_) return;
    for (; cand != 0; cand &= cand - 1) {
      VarSet v = cand & -cand;
      minimum_from(chosen | v, forbid);
      forbid |= v;
    }
  }

  std::vector<VarSet> edges_;
  std::vector<VarSet> found_;
  int best_ = 0;
};

}  // namespace

std::vector<VarSet> minimal_transversals(std::span<const VarSet> edges) {
  return TransversalSearch(edges).enumerate();
}

int min_transversal_size(std::span<const VarSet> edges) { return TransversalSearch(edges).minimum(); }

std::vector<int> PrimeList::heights() const {
  std::vector<int> h;
  h.reserve(primes.size());
  for (VarSet p : primes) h.push_back(count(p));
  return h;
}

bool PrimeList::equicardinal() const {
  return std::all_of(primes.begin(), primes.end(),
                     [&](VarSet p) { return count(p) == count(primes.front()); });
}

PrimeList minimal_primes(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw InputError("minimal_primes needs a squarefree ideal; polarize it first");
  const auto supports = ideal.supports();
  return PrimeList{minimal_transversals(supports)};
}

int height(const MonomialIdeal& ideal) {
  const auto pol = polarize(ideal);
  return min_transversal_size(pol.ideal.supports());
}

int krull_dim(const MonomialIdeal& ideal) { return ideal.nvars() - height(ideal); }

CriterionReport is_unmixed(const MonomialIdeal& ideal, const Limits& limits) {
  const auto pol = polarize_checked(ideal, limits);
  const auto primes = minimal_primes(pol.ideal);
  if (primes.equicardinal()) return CriterionReport::pass();
  auto by_size = [](VarSet a, VarSet b) { return count(a) < count(b); };
  const VarSet small = *std::min_element(primes.primes.begin(), primes.primes.end(), by_size);
  const VarSet large = *std::max_element(primes.primes.begin(), primes.primes.end(), by_size);
  Violation v;
  v.clause = "mixed-heights";
  v.sets = {pol.names(small), pol.names(large)};
  v.weights = {count(small), count(large)};
  v.note = "minimal primes of the polarization with different heights";
  return CriterionReport({v});
}

}  // namespace vwc
