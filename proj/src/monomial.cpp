#include "vwc/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vwc/errors.hpp"

namespace vwc {

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > static_cast<std::uint32_t>(kMaxExponent))
      throw InputError("exponent of x" + std::to_string(i) + " exceeds 65536");
}

long Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0L); }

bool Monomial::is_unit() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

VarSet Monomial::support() const {
  if (nvars() > kMaxVars) throw ResourceLimitError("support masks are limited to 64 variables");
  VarSet s = 0;
  for (int i = 0; i < nvars(); ++i)
    if (exps_[i] > 0) s |= bit(i);
  return s;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < nvars(); ++i) {
    if (exps_[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << i;
    if (exps_[i] > 1) os << '^' << exps_[i];
  }
  if (first) os << '1';
  return os.str();
}

bool graded_lex_before(const Monomial& a, const Monomial& b) {
  const long da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  if (nvars < 0) throw InputError("negative variable count");
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].nvars() != nvars)
      throw InputError("generator #" + std::to_string(k) + " has " +
                       std::to_string(gens[k].nvars()) + " exponents, expected " +
                       std::to_string(nvars));
    if (gens[k].is_unit()) throw InputError("generator #" + std::to_string(k) + " is the unit monomial");
  }
  std::sort(gens.begin(), gens.end(), graded_lex_before);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // After sorting by degree, a divisor always precedes its multiples.
  for (auto& g : gens) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& m) { return m.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

std::vector<int> MonomialIdeal::caps() const {
  std::vector<int> a(nvars_, 0);
  for (const auto& g : gens_)
    for (int i = 0; i < nvars_; ++i) a[i] = std::max<int>(a[i], static_cast<int>(g[i]));
  return a;
}

std::vector<VarSet> MonomialIdeal::supports() const {
  std::vector<VarSet> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(g.support());
  return out;
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < gens_.size(); ++k) os << (k ? ", " : "") << gens_[k].to_string();
  os << ')';
  return os.str();
}

std::string variable_name(int i) { return "x" + std::to_string(i); }

std::vector<std::string> variable_names(VarSet s) {
  std::vector<std::string> out;
  for_each_index(s, [&](int i) { out.push_back(variable_name(i)); });
  return out;
}

std::string PolarizedIdeal::name(int new_index) const {
  auto [i, k] = origin.at(new_index);
  return "x" + std::to_string(i) + "_" + std::to_string(k);
}

std::vector<std::string> PolarizedIdeal::names(VarSet s) const {
  std::vector<std::string> out;
  for_each_index(s, [&](int v) { out.push_back(name(v)); });
  return out;
}

MonomialIdeal minimal_generators(std::vector<Monomial> raw, int nvars) {
  return MonomialIdeal(nvars, std::move(raw));
}

MonomialIdeal edge_ideal(const LabeledGraph& g) {
  std::vector<Monomial> gens;
  for (const Edge& e : g.edges()) {
    std::vector<std::uint32_t> ex(g.order(), 0);
    ex[e.u] = ex[e.v] = 1;
    gens.emplace_back(std::move(ex));
  }
  return MonomialIdeal(g.order(), std::move(gens));
}

MonomialIdeal weighted_edge_ideal(const LabeledGraph& g, const EdgeWeighting& w) {
  validate_weighting(g, w);
  std::vector<Monomial> gens;
  for (const Edge& e : g.edges()) {
    std::vector<std::uint32_t> ex(g.order(), 0);
    ex[e.u] = ex[e.v] = static_cast<std::uint32_t>(w.at(e));
    gens.emplace_back(std::move(ex));
  }
  return MonomialIdeal(g.order(), std::move(gens));
}

MonomialIdeal weighted_edge_ideal(const WeightedVWCGraph& gw) {
  return weighted_edge_ideal(gw.graph(), gw.weights());
}

MonomialIdeal oriented_edge_ideal(const VertexWeightedOrientedGraph& d) {
  std::vector<Monomial> gens;
  for (const Arc& a : d.arcs()) {
    std::vector<std::uint32_t> ex(d.order(), 0);
    ex[a.from] = 1;
    ex[a.to] = static_cast<std::uint32_t>(d.vertex_weights()[a.to]);
    gens.emplace_back(std::move(ex));
  }
  return MonomialIdeal(d.order(), std::move(gens));
}

PolarizedIdeal polarize(const MonomialIdeal& ideal) {
  PolarizedIdeal out;
  out.caps = ideal.caps();
  out.offset.resize(ideal.nvars());
  int total = 0;
  for (int i = 0; i < ideal.nvars(); ++i) {
    out.offset[i] = total;
    for (int k = 1; k <= out.caps[i]; ++k) out.origin.emplace_back(i, k);
    total += out.caps[i];
  }
  if (total > kMaxVars)
    throw ResourceLimitError("polarization needs " + std::to_string(total) +
                             " variables, more than the supported 64");
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    std::vector<std::uint32_t> ex(total, 0);
    for (int i = 0; i < ideal.nvars(); ++i)
      for (std::uint32_t k = 1; k <= g[i]; ++k) ex[out.index(i, static_cast<int>(k))] = 1;
    gens.emplace_back(std::move(ex));
  }
  out.ideal = MonomialIdeal(total, std::move(gens));
  return out;
}

PolarizedIdeal polarize_checked(const MonomialIdeal& ideal, const Limits& limits) {
  auto caps = ideal.caps();
  const long total = std::accumulate(caps.begin(), caps.end(), 0L);
  if (total > limits.max_polarized_vars)
    throw ResourceLimitError("polarized ideal has " + std::to_string(total) +
                             " variables, above the cap of " +
                             std::to_string(limits.max_polarized_vars) + " (raise --cap-vars)");
  return polarize(ideal);
}

}  // namespace vwc
