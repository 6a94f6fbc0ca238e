#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vwc/graph.hpp"
#include "vwc/varset.hpp"

namespace vwc {

/// Exponent vector over a fixed ambient variable count. Exponents are capped
/// at 2^16.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents);

  int nvars() const { return static_cast<int>(exps_.size()); }
  std::uint32_t operator[](int i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  long degree() const;
  bool is_unit() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  /// Variables with a positive exponent. Requires nvars() <= 64.
  VarSet support() const;

  /// "x0^2*x3", "1" for the unit.
  std::string to_string() const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Canonical generator order: total degree ascending, then exponent vectors
/// in descending lexicographic order (x0x1 before x0x2 before x1x2).
bool graded_lex_before(const Monomial& a, const Monomial& b);

/// Monomial ideal given by its minimal generators in canonical order. An
/// empty generator list is the zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes and sorts. Throws InputError on the unit monomial or on a
  /// generator whose length differs from nvars.
  MonomialIdeal(int nvars, std::vector<Monomial> gens);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_squarefree() const;

  /// a_i = largest exponent of x_i among the generators.
  std::vector<int> caps() const;
  std::vector<VarSet> supports() const;

  std::string to_string() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  int nvars_ = 0;
  std::vector<Monomial> gens_;
};

/// Caps applied by operations whose cost is exponential in the polarized
/// variable count.
struct Limits {
  int max_polarized_vars = 26;
};

/// Squarefree ideal on sum(a_i) variables together with the map between
/// (original variable i, copy k) pairs, k = 1..a_i, and new indices.
struct PolarizedIdeal {
  MonomialIdeal ideal;
  std::vector<int> caps;
  std::vector<int> offset;                  ///< first new index of x_i
  std::vector<std::pair<int, int>> origin;  ///< new index -> (i, k)

  int index(int i, int k) const { return offset[i] + k - 1; }
  /// Display name "x{i}_{k}" of a polarized variable.
  std::string name(int new_index) const;
  std::vector<std::string> names(VarSet s) const;
};

/// "x{i}" for an original variable.
std::string variable_name(int i);
std::vector<std::string> variable_names(VarSet s);

MonomialIdeal minimal_generators(std::vector<Monomial> raw, int nvars);

MonomialIdeal edge_ideal(const LabeledGraph& g);
MonomialIdeal weighted_edge_ideal(const LabeledGraph& g, const EdgeWeighting& w);
MonomialIdeal weighted_edge_ideal(const WeightedVWCGraph& gw);
MonomialIdeal oriented_edge_ideal(const VertexWeightedOrientedGraph& d);

/// Throws ResourceLimitError when sum(a_i) exceeds 64.
PolarizedIdeal polarize(const MonomialIdeal& ideal);

/// Polarizes and enforces `limits.max_polarized_vars`.
PolarizedIdeal polarize_checked(const MonomialIdeal& ideal, const Limits& limits);

}  // namespace vwc
