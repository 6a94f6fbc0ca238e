#include "vwc/sr_engine.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "vwc/errors.hpp"
#include "vwc/primes.hpp"

namespace vwc {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::size_t kMaxFaces = std::size_t{1} << 24;
constexpr std::size_t kMaxCachedProblems = std::size_t{1} << 21;

}  // namespace

std::size_t SrProblemHash::operator()(const SrProblem& p) const {
  std::uint64_t h = mix(p.verts);
  for (VarSet g : p.gens) h = mix(h ^ g);
  return static_cast<std::size_t>(h);
}

SrProblem SrProblem::make(VarSet verts, std::vector<VarSet> nonfaces) {
  VarSet excluded = 0;
  for (VarSet g : nonfaces) {
    if (g == 0) throw std::logic_error("SrProblem: the empty set cannot be a non-face here");
    if (subset_of(g, verts) && count(g) == 1) excluded |= g;
  }
  verts &= ~excluded;
  std::erase_if(nonfaces, [&](VarSet g) { return !subset_of(g, verts); });
  std::sort(nonfaces.begin(), nonfaces.end(), [](VarSet a, VarSet b) {
    return count(a) != count(b) ? count(a) < count(b) : a < b;
  });
  nonfaces.erase(std::unique(nonfaces.begin(), nonfaces.end()), nonfaces.end());
  SrProblem p;
  p.verts = verts;
  for (VarSet g : nonfaces) {
    bool redundant = std::any_of(p.gens.begin(), p.gens.end(), [&](VarSet m) { return subset_of(m, g); });
    if (!redundant) p.gens.push_back(g);
  }
  std::sort(p.gens.begin(), p.gens.end());
  return p;
}

VarSet SrProblem::covered() const {
  VarSet c = 0;
  for (VarSet g : gens) c |= g;
  return c;
}

bool SrProblem::is_face(VarSet f) const {
  if (!subset_of(f, verts)) return false;
  return std::none_of(gens.begin(), gens.end(), [&](VarSet g) { return subset_of(g, f); });
}

SrProblem SrProblem::link(int v) const {
  std::vector<VarSet> next;
  next.reserve(gens.size());
  for (VarSet g : gens) next.push_back(g & ~bit(v));
  return make(verts & ~bit(v), std::move(next));
}

SrProblem SrProblem::deletion(int v) const { return restrict_to(verts & ~bit(v)); }

SrProblem SrProblem::restrict_to(VarSet w) const {
  SrProblem p;
  p.verts = w & verts;
  for (VarSet g : gens)
    if (subset_of(g, p.verts)) p.gens.push_back(g);
  return p;
}

std::vector<SrProblem> SrProblem::components() const {
  std::vector<SrProblem> out;
  VarSet cones = cone_points();
  for_each_index(cones, [&](int v) { out.push_back(SrProblem{bit(v), {}}); });
  std::vector<char> used(gens.size(), 0);
  for (std::size_t s = 0; s < gens.size(); ++s) {
    if (used[s]) continue;
    VarSet span = gens[s];
    used[s] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t t = 0; t < gens.size(); ++t)
        if (!used[t] && (gens[t] & span)) {
          used[t] = 1;
          span |= gens[t];
          grew = true;
        }
    }
    out.push_back(restrict_to(span));
  }
  return out;
}

VarSet SrProblem::some_facet() const {
  VarSet f = 0;
  for_each_index(verts, [&](int v) {
    if (is_face(f | bit(v))) f |= bit(v);
  });
  return f;
}

FacesByDimension SrProblem::faces(int max_dim) const {
  const auto order = to_indices(verts);
  // A non-face inside f ∪ {v}, with every vertex of f below v, has v as its
  // largest vertex.
  std::vector<std::vector<VarSet>> by_top(kMaxVars);
  for (VarSet g : gens) by_top[63 - std::countl_zero(g)].push_back(g);

  FacesByDimension out(1, std::vector<VarSet>{0});
  std::size_t total = 1;
  auto visit = [&](auto&& self, VarSet f, std::size_t start) -> void {
    for (std::size_t i = start; i < order.size(); ++i) {
      const int v = order[i];
      const VarSet g = f | bit(v);
      bool ok = std::none_of(by_top[v].begin(), by_top[v].end(), [&](VarSet m) { return subset_of(m, g); });
      if (!ok) continue;
      const int d = count(g);  // g has dimension d - 1
      if (static_cast<int>(out.size()) <= d) out.resize(d + 1);
      out[d].push_back(g);
      if (++total > kMaxFaces)
        throw ResourceLimitError("simplicial complex has more than 2^24 faces");
      if (d <= max_dim) self(self, g, i + 1);
    }
  };
  visit(visit, 0, 0);
  return out;
}

// --- homology ---------------------------------------------------------------

namespace {

HomologyProfile truncated(HomologyProfile h, int upto) {
  if (upto + 2 < static_cast<int>(h.ranks.size())) h.ranks.resize(upto + 2);
  h.trim();
  return h;
}

// H̃_{-1} and H̃_0 from the 1-skeleton; p has at least one vertex.
HomologyProfile low_degrees(const SrProblem& p, int upto) {
  const auto order = to_indices(p.verts);
  std::vector<int> parent(kMaxVars);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::unordered_set<VarSet> missing;
  for (VarSet g : p.gens)
    if (count(g) == 2) missing.insert(g);
  long comps = static_cast<long>(order.size());
  for (std::size_t a = 0; a < order.size(); ++a)
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      if (missing.count(bit(order[a]) | bit(order[b]))) continue;
      const int ra = find(order[a]), rb = find(order[b]);
      if (ra != rb) {
        parent[ra] = rb;
        --comps;
      }
    }
  HomologyProfile h{{0}};
  if (upto >= 0) h.ranks.push_back(comps - 1);
  h.trim();
  return h;
}

}  // namespace

HomologyProfile LinkEngine::homology(const SrProblem& p, int upto) {
  upto = std::min(upto, kAllDegrees);
  if (auto it = hom_cache_.find(p); it != hom_cache_.end() && it->second.upto >= upto)
    return truncated(it->second.profile, upto);
  HomologyProfile h = homology_uncached(p, upto);
  h.trim();
  if (hom_cache_.size() >= kMaxCachedProblems) hom_cache_.clear();
  hom_cache_[p] = CachedHomology{h, upto};
  return h;
}

HomologyProfile LinkEngine::homology_uncached(const SrProblem& p, int upto) {
  if (p.verts == 0) return HomologyProfile{{1}};
  if (p.cone_points() != 0) return HomologyProfile{};
  if (upto <= 0) return low_degrees(p, upto);

  auto comps = p.components();
  if (comps.size() > 1) {
    // Reduced homology of a join: H̃_{i+j+1}(A*B) = ⊕ H̃_i(A) ⊗ H̃_j(B).
    // Degrees <= upto of the join only involve degrees <= upto of each factor.
    std::vector<long> acc{1};
    for (const auto& c : comps) {
      const auto hc = homology(c, upto);
      if (hc.acyclic()) return HomologyProfile{};
      std::vector<long> next(acc.size() + hc.ranks.size() - 1, 0);
      for (std::size_t a = 0; a < acc.size(); ++a)
        for (std::size_t b = 0; b < hc.ranks.size(); ++b) next[a + b] += acc[a] * hc.ranks[b];
      acc.swap(next);
    }
    return truncated(HomologyProfile{acc}, upto);
  }

  // A vertex whose link is a cone can be deleted without changing homology.
  for (VarSet rest = p.verts; rest != 0; rest &= rest - 1) {
    const int v = lowest(rest);
    const SrProblem lk = p.link(v);
    if (lk.verts != 0 && lk.cone_points() != 0) return homology(p.deletion(v), upto);
  }

  const int n = count(p.verts);
  const int r = static_cast<int>(p.gens.size());
  if (r < n) {
    // Alexander duality, H̃_i(Δ) ≅ H̃^{n-i-3}(Δ^∨), and Δ^∨ is homotopy
    // equivalent to the nerve of its facets V \ M_j: a set of non-faces
    // spans a nerve simplex iff their union is not all of V.
    HomologyProfile out;
    out.ranks.assign(n, 0);
    if (r == 1 && p.gens[0] == p.verts) {
      out.ranks[n - 1] = 1;  // boundary of the simplex on V
      return truncated(out, upto);
    }
    std::vector<VarSet> containing;
    for_each_index(p.verts, [&](int u) {
      VarSet t = 0;
      for (int j = 0; j < r; ++j)
        if (contains(p.gens[j], u)) t |= bit(j);
      containing.push_back(t);
    });
    const auto covers = minimal_transversals(containing);
    const auto nerve = homology(SrProblem::make(full_set(r), covers));
    for (int e = -1; e + 1 < static_cast<int>(nerve.ranks.size()); ++e) {
      const long rk = nerve.rank(e);
      if (rk == 0) continue;
      const int i = n - e - 3;
      out.ranks.at(i + 1) = rk;
    }
    return truncated(out, upto);
  }

  // Degrees <= upto need faces up to dimension upto + 1.
  auto faces = p.faces(upto + 1);
  return truncated(homology_from_faces(faces, field_), upto);
}

int LinkEngine::dim(const SrProblem& p) {
  if (auto it = dim_cache_.find(p); it != dim_cache_.end()) return it->second;
  const int d = p.verts == 0 ? -1 : count(p.verts) - min_transversal_size(p.gens) - 1;
  if (dim_cache_.size() >= kMaxCachedProblems) dim_cache_.clear();
  dim_cache_.emplace(p, d);
  return d;
}

// --- link-based tests -------------------------------------------------------

namespace {

// Vertices lying in exactly the same non-faces ("twins") are merged into one.
// k[Δ] is a flat extension of the merged ring with fibre k[u_1..u_m]/(u_1..u_m),
// so (S_s) and CM carry over and depth grows by m - 1. Every link of the
// merged complex is a link of Δ: lk(F') ≅ lk(F' ∪ (U \ {rep})).
struct TwinReduction {
  SrProblem reduced;
  VarSet extra = 0;  ///< merged-away vertices, U \ {rep} over all groups
};

std::optional<TwinReduction> merge_twins(const SrProblem& p) {
  if (p.gens.size() > 64) return std::nullopt;
  std::unordered_map<std::uint64_t, int> rep;
  VarSet extra = 0;
  for_each_index(p.verts, [&](int v) {
    std::uint64_t sig = 0;
    for (std::size_t j = 0; j < p.gens.size(); ++j)
      if (contains(p.gens[j], v)) sig |= std::uint64_t{1} << j;
    if (!rep.emplace(sig, v).second) extra |= bit(v);
  });
  if (extra == 0) return std::nullopt;
  std::vector<VarSet> gens;
  gens.reserve(p.gens.size());
  for (VarSet g : p.gens) gens.push_back(g & ~extra);
  return TwinReduction{SrProblem::make(p.verts & ~extra, std::move(gens)), extra};
}

}  // namespace


std::optional<LinkWitness> LinkEngine::serre_violation(const SrProblem& p, int s) {
  auto& cache = serre_cache_[s];
  if (auto it = cache.find(p); it != cache.end()) return it->second;

  auto compute = [&]() -> std::optional<LinkWitness> {
    if (p.verts == 0) return std::nullopt;
    if (const VarSet cone = p.cone_points(); cone != 0) {
      auto w = serre_violation(SrProblem::make(p.verts & ~cone, p.gens), s);
      if (w) w->face |= cone;
      return w;
    }
    if (auto twins = merge_twins(p)) {
      auto w = serre_violation(twins->reduced, s);
      if (w) w->face |= twins->extra;
      return w;
    }
    const auto comps = p.components();
    if (comps.size() > 1) {
      for (std::size_t a = 0; a < comps.size(); ++a) {
        auto w = serre_violation(comps[a], s);
        if (!w) continue;
        for (std::size_t b = 0; b < comps.size(); ++b)
          if (b != a) w->face |= comps[b].some_facet();
        return w;
      }
      return std::nullopt;
    }
    for (VarSet rest = p.verts; rest != 0; rest &= rest - 1) {
      const int v = lowest(rest);
      if (auto w = serre_violation(p.link(v), s)) {
        w->face |= bit(v);
        return w;
      }
    }
    const int bound = std::min(s - 1, dim(p));
    if (bound <= -1) return std::nullopt;
    const auto h = homology(p, bound - 1);
    for (int deg = -1; deg < bound; ++deg)
      if (h.rank(deg) != 0) return LinkWitness{0, deg, h.rank(deg)};
    return std::nullopt;
  };

  auto result = compute();
  auto& again = serre_cache_[s];
  if (again.size() >= kMaxCachedProblems) again.clear();
  again.emplace(p, result);
  return result;
}

int LinkEngine::local_depth(const SrProblem& p) { return depth_capped(p, dim(p) + 1); }

int LinkEngine::depth_capped(const SrProblem& p, int cap) {
  if (cap <= 0) return cap;
  if (auto it = depth_cache_.find(p); it != depth_cache_.end()) {
    const auto& c = it->second;
    if (c.exact || c.value >= cap) return std::min(c.value, cap);
  }
  int result = 0;
  if (p.verts == 0) {
    result = 0;
  } else if (const VarSet cone = p.cone_points(); cone != 0) {
    result = count(cone) + depth_capped(SrProblem::make(p.verts & ~cone, p.gens), cap - count(cone));
  } else if (auto twins = merge_twins(p)) {
    const int m = count(twins->extra);
    result = m + depth_capped(twins->reduced, cap - m);
  } else if (auto comps = p.components(); comps.size() > 1) {
    for (const auto& c : comps) result += depth_capped(c, cap);
  } else {
    result = cap;
    for (VarSet rest = p.verts; rest != 0 && result > 1; rest &= rest - 1)
      result = std::min(result, 1 + depth_capped(p.link(lowest(rest)), result - 1));
    // Only degrees j with j + 1 < result can lower the minimum.
    if (result >= 1) {
      const int j = homology(p, result - 2).lowest_nonzero();
      if (j != INT_MAX) result = std::min(result, j + 1);
    }
  }
  result = std::min(result, cap);
  if (depth_cache_.size() >= kMaxCachedProblems) depth_cache_.clear();
  depth_cache_[p] = CachedDepth{result, result < cap};
  return result;
}

int LinkEngine::projective_dimension(const SrProblem& p) {
  std::unordered_set<VarSet> seen{0};
  std::vector<VarSet> family{0};
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (VarSet g : p.gens) {
      const VarSet w = family[i] | g;
      if (seen.insert(w).second) {
        family.push_back(w);
        if (family.size() > kMaxBettiSupports)
          throw ResourceLimitError("more than 2^23 unions of non-faces in the Betti sweep");
      }
    }
  }
  std::sort(family.begin(), family.end(), [](VarSet a, VarSet b) { return count(a) > count(b); });
  int best = 0;  // β_{0,∅} = 1
  for (VarSet w : family) {
    if (w == 0 || count(w) - 1 <= best) break;
    // Degree j improves the bound only when j < |W| - 1 - best.
    const int j = homology(p.restrict_to(w), count(w) - 2 - best).lowest_nonzero();
    if (j != INT_MAX) best = std::max(best, count(w) - 1 - j);
  }
  return best;
}

}  // namespace vwc
