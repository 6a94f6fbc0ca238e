#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "vwc/chain.hpp"
#include "vwc/varset.hpp"

namespace vwc {

/// A Stanley-Reisner complex given by its vertex set and its minimal
/// non-faces. Normalized: non-faces are minimal, sorted, of size >= 2 and
/// contained in `verts`; vertices excluded by singleton non-faces are
/// dropped. verts = ∅ is the complex {∅}.
struct SrProblem {
  VarSet verts = 0;
  std::vector<VarSet> gens;

  static SrProblem make(VarSet verts, std::vector<VarSet> nonfaces);

  VarSet covered() const;
  VarSet cone_points() const { return verts & ~covered(); }
  bool is_face(VarSet f) const;

  SrProblem link(int v) const;
  SrProblem deletion(int v) const;
  /// Induced subcomplex on w ⊆ verts.
  SrProblem restrict_to(VarSet w) const;
  /// Join factors; a single element when the complex does not split.
  std::vector<SrProblem> components() const;
  /// Some facet, built greedily in ascending vertex order.
  VarSet some_facet() const;
  /// Faces grouped by dimension, up to dimension `max_dim`.
  FacesByDimension faces(int max_dim = kMaxVars) const;

  bool operator==(const SrProblem&) const = default;
};

struct SrProblemHash {
  std::size_t operator()(const SrProblem& p) const;
};

/// A face F and a degree i with H̃_i(lk F) ≠ 0.
struct LinkWitness {
  VarSet face = 0;
  int degree = 0;
  long rank = 0;
};

/// Memoized homology of Stanley-Reisner complexes and the link-based tests
/// built on it, for one coefficient field. Not thread-safe; use one engine
/// per thread.
///
/// Homology is computed after stripping cone points (acyclic), splitting
/// joins (ranks convolve), deleting dominated vertices (a strong collapse)
/// and, when there are fewer non-faces than vertices, passing to the nerve
/// of the Alexander dual. Whatever remains goes to boundary-matrix reduction.
class LinkEngine {
 public:
  explicit LinkEngine(FieldSpec field) : field_(field) {}

  const FieldSpec& field() const { return field_; }

  /// Reduced homology in degrees <= `upto`; ranks above `upto` are absent.
  HomologyProfile homology(const SrProblem& p, int upto = kAllDegrees);
  int dim(const SrProblem& p);

  static constexpr int kAllDegrees = kMaxVars;

  /// A face F with H̃_i(lk F) ≠ 0 for some i < min(s - 1, dim lk F), or
  /// nullopt. s = kReisner gives Reisner's criterion.
  std::optional<LinkWitness> serre_violation(const SrProblem& p, int s);
  static constexpr int kReisner = 1 << 20;

  /// depth k[Δ] = min over faces F and degrees j with H̃_j(lk F) ≠ 0 of
  /// j + |F| + 1.
  int local_depth(const SrProblem& p);

  /// Projective dimension of k[Δ] from the Betti numbers
  /// β_{i,W} = dim H̃_{|W|-i-1}(Δ_W). Only W that are unions of non-faces
  /// are visited; any other W leaves a cone point in Δ_W.
  int projective_dimension(const SrProblem& p);

  std::size_t homology_cache_size() const { return hom_cache_.size(); }

 private:
  struct CachedHomology {
    HomologyProfile profile;
    int upto;
  };
  HomologyProfile homology_uncached(const SrProblem& p, int upto);
  /// min(depth, cap).
  int depth_capped(const SrProblem& p, int cap);

  struct CachedDepth {
    int value;
    bool exact;  ///< otherwise value is only a lower bound
  };

  FieldSpec field_;
  std::unordered_map<SrProblem, CachedHomology, SrProblemHash> hom_cache_;
  std::unordered_map<SrProblem, int, SrProblemHash> dim_cache_;
  std::unordered_map<SrProblem, CachedDepth, SrProblemHash> depth_cache_;
  std::unordered_map<int, std::unordered_map<SrProblem, std::optional<LinkWitness>, SrProblemHash>>
      serre_cache_;
};

/// Caps the number of unions of non-faces visited by projective_dimension.
inline constexpr std::size_t kMaxBettiSupports = std::size_t{1} << 23;

}  // namespace vwc
