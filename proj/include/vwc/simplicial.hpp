#pragma once

#include <vector>

#include "vwc/chain.hpp"
#include "vwc/monomial.hpp"
#include "vwc/report.hpp"
#include "vwc/sr_engine.hpp"
#include "vwc/varset.hpp"

namespace vwc {

/// Simplicial complex on the ground set {0..nverts-1}, stored by its facets.
/// No facets is the void complex; the single facet ∅ is the complex {∅}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Drops non-maximal and repeated facets and sorts the rest. Throws
  /// InputError on a vertex outside the ground set or nverts > 64.
  SimplicialComplex(int nverts, std::vector<VarSet> facets);

  static SimplicialComplex void_complex(int nverts) { return SimplicialComplex(nverts, {}); }
  static SimplicialComplex empty_complex(int nverts) { return SimplicialComplex(nverts, {0}); }
  static SimplicialComplex simplex(int nverts) { return SimplicialComplex(nverts, {full_set(nverts)}); }

  int nverts() const { return nverts_; }
  const std::vector<VarSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  VarSet vertices() const;
  /// -1 for {∅}; the void complex also reports -1.
  int dim() const;
  bool is_pure() const;
  bool is_face(VarSet f) const;
  FacesByDimension faces() const;
  /// Σ_{d ≥ -1} (-1)^d f_d.
  long reduced_euler_characteristic() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int nverts_ = 0;
  std::vector<VarSet> facets_;
};

/// Complex of the squarefree ideal: facets are the complements of its minimal
/// primes. The zero ideal gives the full simplex.
SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);

/// The same complex as an engine problem, without enumerating primes.
SrProblem stanley_reisner_problem(const MonomialIdeal& ideal);

/// Minimal non-faces of a nonvoid complex. Throws InputError on the void one.
SrProblem to_problem(const SimplicialComplex& c);

/// lk_C(F). Throws InputError when F is not a face.
SimplicialComplex link(const SimplicialComplex& c, VarSet face);

/// Reduced homology. Throws ResourceLimitError beyond `max_vertices` vertices.
HomologyProfile reduced_homology(const SimplicialComplex& c, const FieldSpec& field,
                                 int max_vertices = 26);

/// Reisner's criterion on the complex of the polarization. A violation
/// names the face F (polarized variables), the degree i < dim lk F and the
/// rank of H̃_i(lk F).
CriterionReport is_cm_reisner(const MonomialIdeal& ideal, const FieldSpec& field,
                              const Limits& limits = {});
CriterionReport is_cm_reisner(const MonomialIdeal& ideal, LinkEngine& engine,
                              const Limits& limits = {});
CriterionReport is_cm_reisner(const SimplicialComplex& c, const FieldSpec& field);

/// Link criterion for (S_s): H̃_i(lk F) = 0 for all faces F and
/// i < min(s - 1, dim lk F). Squarefree ideals only.
CriterionReport serre_sk(const MonomialIdeal& ideal, int s, const FieldSpec& field,
                         const Limits& limits = {});
CriterionReport serre_sk(const MonomialIdeal& ideal, int s, LinkEngine& engine,
                         const Limits& limits = {});
CriterionReport serre_sk(const SimplicialComplex& c, int s, const FieldSpec& field);

/// The link criterion applied to the polarization of any monomial ideal,
/// faces named x{i}_{k}. This is a property of the polarized ideal only.
CriterionReport serre_sk_polarized(const MonomialIdeal& ideal, int s, LinkEngine& engine,
                                   const Limits& limits = {});

/// depth S/I = nvars - pd, with pd read off Hochster's formula on the
/// polarization (polarization preserves projective dimension).
int depth_via_hochster(const MonomialIdeal& ideal, const FieldSpec& field, const Limits& limits = {});
int depth_via_hochster(const MonomialIdeal& ideal, LinkEngine& engine, const Limits& limits = {});

/// The same depth from the vanishing of link homology.
int depth_via_links(const MonomialIdeal& ideal, const FieldSpec& field, const Limits& limits = {});
int depth_via_links(const MonomialIdeal& ideal, LinkEngine& engine, const Limits& limits = {});

}  // namespace vwc
