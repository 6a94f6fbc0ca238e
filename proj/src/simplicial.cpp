#include "vwc/simplicial.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "vwc/errors.hpp"
#include "vwc/primes.hpp"

namespace vwc {

SimplicialComplex::SimplicialComplex(int nverts, std::vector<VarSet> facets) : nverts_(nverts) {
  if (nverts < 0 || nverts > kMaxVars)
    throw InputError("complex: nverts must lie in [0, 64], got " + std::to_string(nverts));
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (!subset_of(facets[i], full_set(nverts)))
      throw InputError("complex: facet #" + std::to_string(i) + " has a vertex outside 0.." +
                       std::to_string(nverts - 1));
  std::sort(facets.begin(), facets.end(), [](VarSet a, VarSet b) { return count(a) > count(b); });
  for (VarSet f : facets) {
    bool covered = std::any_of(facets_.begin(), facets_.end(), [&](VarSet g) { return subset_of(f, g); });
    if (!covered) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end(), lex_less);
}

VarSet SimplicialComplex::vertices() const {
  VarSet v = 0;
  for (VarSet f : facets_) v |= f;
  return v;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (VarSet f : facets_) d = std::max(d, count(f) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](VarSet f) { return count(f) == count(facets_.front()); });
}

bool SimplicialComplex::is_face(VarSet f) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VarSet g) { return subset_of(f, g); });
}

FacesByDimension SimplicialComplex::faces() const {
  if (is_void()) return {};
  std::unordered_set<VarSet> seen;
  for (VarSet f : facets_) {
    for (VarSet s = f;; s = (s - 1) & f) {
      seen.insert(s);
      if (s == 0) break;
    }
  }
  FacesByDimension out(dim() + 2);
  for (VarSet s : seen) out[count(s)].push_back(s);
  for (auto& layer : out) std::sort(layer.begin(), layer.end(), lex_less);
  return out;
}

long SimplicialComplex::reduced_euler_characteristic() const {
  const auto f = faces();
  long chi = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    chi += (i % 2 == 0 ? -1 : 1) * static_cast<long>(f[i].size());  // f[i] holds (i-1)-faces
  return chi;
}

SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw InputError("Stanley-Reisner complex needs a squarefree ideal; polarize first");
  const int n = ideal.nvars();
  if (ideal.is_zero()) return SimplicialComplex::simplex(n);
  std::vector<VarSet> facets;
  for (VarSet p : minimal_primes(ideal).primes) facets.push_back(full_set(n) & ~p);
  return SimplicialComplex(n, std::move(facets));
}

SrProblem stanley_reisner_problem(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree())
    throw InputError("Stanley-Reisner complex needs a squarefree ideal; polarize first");
  if (ideal.nvars() > kMaxVars) throw ResourceLimitError("more than 64 variables");
  return SrProblem::make(full_set(ideal.nvars()), ideal.supports());
}

SrProblem to_problem(const SimplicialComplex& c) {
  if (c.is_void()) throw InputError("the void complex has no Stanley-Reisner ideal");
  const VarSet ground = full_set(c.nverts());
  std::vector<VarSet> complements;
  for (VarSet f : c.facets()) complements.push_back(ground & ~f);
  return SrProblem::make(ground, minimal_transversals(complements));
}

SimplicialComplex link(const SimplicialComplex& c, VarSet face) {
  std::vector<VarSet> facets;
  for (VarSet f : c.facets())
    if (subset_of(face, f)) facets.push_back(f & ~face);
  if (facets.empty()) throw InputError("link: the given set is not a face of the complex");
  return SimplicialComplex(c.nverts(), std::move(facets));
}

HomologyProfile reduced_homology(const SimplicialComplex& c, const FieldSpec& field, int max_vertices) {
  if (count(c.vertices()) > max_vertices)
    throw ResourceLimitError("homology: complex has " + std::to_string(count(c.vertices())) +
                             " vertices, cap is " + std::to_string(max_vertices));
  if (c.is_void()) return HomologyProfile{};
  LinkEngine engine(field);
  return engine.homology(to_problem(c));
}

namespace {

Violation link_violation(const std::string& clause, const LinkWitness& w, const SrProblem& p,
                         LinkEngine& engine, std::vector<std::string> face_names) {
  SrProblem lk = p;
  for_each_index(w.face, [&](int v) { lk = lk.link(v); });
  Violation v;
  v.clause = clause;
  v.sets.push_back(std::move(face_names));
  v.degree = w.degree;
  v.rank = w.rank;
  v.note = "dim lk F = " + std::to_string(engine.dim(lk));
  return v;
}

CriterionReport report_from(const std::optional<LinkWitness>& w, const std::string& clause,
                            const SrProblem& p, LinkEngine& engine,
                            const std::vector<std::string>& names) {
  CriterionReport r;
  if (w) {
    std::vector<std::string> face;
    for_each_index(w->face, [&](int v) { face.push_back(names.at(v)); });
    r.add(link_violation(clause, *w, p, engine, std::move(face)));
  }
  return r;
}

std::vector<std::string> polarized_names(const PolarizedIdeal& pol) {
  std::vector<std::string> names;
  for (int i = 0; i < pol.ideal.nvars(); ++i) names.push_back(pol.name(i));
  return names;
}

std::vector<std::string> plain_names(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(variable_name(i));
  return names;
}

void check_s(int s) {
  if (s < 1) throw InputError("Serre condition needs s >= 1, got " + std::to_string(s));
}

}  // namespace

CriterionReport is_cm_reisner(const MonomialIdeal& ideal, LinkEngine& engine, const Limits& limits) {
  const auto pol = polarize_checked(ideal, limits);
  const auto p = stanley_reisner_problem(pol.ideal);
  return report_from(engine.serre_violation(p, LinkEngine::kReisner), "reisner", p, engine,
                     polarized_names(pol));
}

CriterionReport is_cm_reisner(const MonomialIdeal& ideal, const FieldSpec& field, const Limits& limits) {
  LinkEngine engine(field);
  return is_cm_reisner(ideal, engine, limits);
}

CriterionReport is_cm_reisner(const SimplicialComplex& c, const FieldSpec& field) {
  LinkEngine engine(field);
  const auto p = to_problem(c);
  return report_from(engine.serre_violation(p, LinkEngine::kReisner), "reisner", p, engine,
                     plain_names(c.nverts()));
}

CriterionReport serre_sk(const MonomialIdeal& ideal, int s, LinkEngine& engine, const Limits& limits) {
  check_s(s);
  if (!ideal.is_squarefree())
    throw InputError("serre_sk needs a squarefree ideal; polarize explicitly first");
  if (ideal.nvars() > limits.max_polarized_vars)
    throw ResourceLimitError("ideal has " + std::to_string(ideal.nvars()) +
                             " variables, cap is " + std::to_string(limits.max_polarized_vars) +
                             " (raise --cap-vars)");
  const auto p = stanley_reisner_problem(ideal);
  return report_from(engine.serre_violation(p, s), "serre", p, engine, plain_names(ideal.nvars()));
}

CriterionReport serre_sk(const MonomialIdeal& ideal, int s, const FieldSpec& field, const Limits& limits) {
  LinkEngine engine(field);
  return serre_sk(ideal, s, engine, limits);
}

CriterionReport serre_sk(const SimplicialComplex& c, int s, const FieldSpec& field) {
  check_s(s);
  LinkEngine engine(field);
  const auto p = to_problem(c);
  return report_from(engine.serre_violation(p, s), "serre", p, engine, plain_names(c.nverts()));
}

CriterionReport serre_sk_polarized(const MonomialIdeal& ideal, int s, LinkEngine& engine,
                                   const Limits& limits) {
  check_s(s);
  const auto pol = polarize_checked(ideal, limits);
  const auto p = stanley_reisner_problem(pol.ideal);
  return report_from(engine.serre_violation(p, s), "serre", p, engine, polarized_names(pol));
}

int depth_via_hochster(const MonomialIdeal& ideal, LinkEngine& engine, const Limits& limits) {
  const auto pol = polarize_checked(ideal, limits);
  const auto p = stanley_reisner_problem(pol.ideal);
  // Variables outside the complex lie in the ideal; each adds one to pd.
  const int pd = engine.projective_dimension(p) + (pol.ideal.nvars() - count(p.verts));
  return ideal.nvars() - pd;
}

int depth_via_hochster(const MonomialIdeal& ideal, const FieldSpec& field, const Limits& limits) {
  LinkEngine engine(field);
  return depth_via_hochster(ideal, engine, limits);
}

int depth_via_links(const MonomialIdeal& ideal, LinkEngine& engine, const Limits& limits) {
  const auto pol = polarize_checked(ideal, limits);
  const auto p = stanley_reisner_problem(pol.ideal);
  return engine.local_depth(p) - (pol.ideal.nvars() - ideal.nvars());
}

int depth_via_links(const MonomialIdeal& ideal, const FieldSpec& field, const Limits& limits) {
  LinkEngine engine(field);
  return depth_via_links(ideal, engine, limits);
}

}  // namespace vwc
