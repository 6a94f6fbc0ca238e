#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace vwc {

/// A subset of at most 64 vertices or variables, bit i standing for index i.
using VarSet = std::uint64_t;

inline constexpr int kMaxVars = 64;

constexpr VarSet bit(int i) { return VarSet{1} << i; }
constexpr int count(VarSet s) { return std::popcount(s); }
constexpr bool contains(VarSet s, int i) { return (s >> i) & 1U; }
constexpr bool subset_of(VarSet a, VarSet b) { return (a & ~b) == 0; }
constexpr int lowest(VarSet s) { return std::countr_zero(s); }

constexpr VarSet full_set(int n) { return n >= 64 ? ~VarSet{0} : bit(n) - 1; }

inline std::vector<int> to_indices(VarSet s) {
  std::vector<int> out;
  out.reserve(count(s));
  for (; s != 0; s &= s - 1) out.push_back(lowest(s));
  return out;
}

inline VarSet from_indices(const std::vector<int>& idx) {
  VarSet s = 0;
  for (int i : idx) s |= bit(i);
  return s;
}

/// Lexicographic comparison of the ascending index lists of two sets.
inline bool lex_less(VarSet a, VarSet b) {
  while (a != 0 && b != 0) {
    int x = lowest(a), y = lowest(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

/// Calls f(i) for every element i of s in ascending order.
template <class F>
void for_each_index(VarSet s, F&& f) {
  for (; s != 0; s &= s - 1) f(lowest(s));
}

}  // namespace vwc
