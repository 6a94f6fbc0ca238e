#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vwc/varset.hpp"

namespace vwc {

/// Coefficient field: characteristic 0 (the rationals) or a prime p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;
  /// Throws InputError unless p is 0 or prime.
  explicit FieldSpec(long characteristic);

  long characteristic() const { return p_; }
  std::string to_string() const;
  bool operator==(const FieldSpec&) const = default;

 private:
  long p_ = 0;
};

/// Ranks of reduced homology, ranks[d + 1] for degree d >= -1.
struct HomologyProfile {
  std::vector<long> ranks;

  long rank(int degree) const {
    const int i = degree + 1;
    return i >= 0 && i < static_cast<int>(ranks.size()) ? ranks[i] : 0;
  }
  bool acyclic() const;
  /// Lowest degree with nonzero rank, or nullopt-like INT_MAX when acyclic.
  int lowest_nonzero() const;
  /// Alternating sum of ranks.
  long euler_characteristic() const;
  void trim();

  bool operator==(const HomologyProfile& o) const;
};

/// Faces grouped by dimension: faces[d + 1] holds the d-faces, so faces[0]
/// is {∅} for any nonvoid complex.
using FacesByDimension = std::vector<std::vector<VarSet>>;

/// Ranks of the boundary maps ∂_d : C_d -> C_{d-1}, d = 0..dim (index d).
/// Column reduction with clearing, from the top dimension down; exact
/// fraction-free integer arithmetic in characteristic 0.
std::vector<long> boundary_ranks(const FacesByDimension& faces, const FieldSpec& field);

/// Reduced homology of the complex with the given faces.
HomologyProfile homology_from_faces(const FacesByDimension& faces, const FieldSpec& field);

}  // namespace vwc
