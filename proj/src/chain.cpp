#include "vwc/chain.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <climits>
#include <numeric>
#include <unordered_map>

#include "vwc/errors.hpp"

namespace vwc {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

template <class T>
using SparseColumn = std::vector<std::pair<int, T>>;

// --- coefficient rings ------------------------------------------------------

struct ModP {
  using value_type = std::uint32_t;
  std::uint64_t p;

  value_type from_sign(int s) const { return s > 0 ? 1 : static_cast<value_type>(p - 1); }
  value_type inverse(value_type a) const {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<value_type>(r);
  }
  // col <- col - (col_low / piv_low) * piv
  void eliminate(SparseColumn<value_type>& col, const SparseColumn<value_type>& piv,
                 SparseColumn<value_type>& scratch) const {
    const std::uint64_t f = std::uint64_t{col.back().second} * inverse(piv.back().second) % p;
    const std::uint64_t neg = (p - f) % p;
    scratch.clear();
    auto a = col.cbegin();
    auto b = piv.cbegin();
    while (a != col.cend() || b != piv.cend()) {
      if (b == piv.cend() || (a != col.cend() && a->first < b->first)) {
        scratch.push_back(*a++);
      } else if (a == col.cend() || b->first < a->first) {
        scratch.emplace_back(b->first, static_cast<value_type>(neg * b->second % p));
        ++b;
      } else {
        std::uint64_t v = (a->second + neg * b->second) % p;
        if (v) scratch.emplace_back(a->first, static_cast<value_type>(v));
        ++a, ++b;
      }
    }
    col.swap(scratch);
  }
};

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}

// Fraction-free elimination over the integers: col <- a*col - b*piv with
// a = piv_low, b = col_low, followed by division by the content.
template <class Int>
struct Integers {
  using value_type = Int;

  static Int mul(const Int& a, const Int& b) {
    if constexpr (std::is_same_v<Int, std::int64_t>) return checked_mul(a, b);
    else return a * b;
  }
  static Int sub(const Int& a, const Int& b) {
    if constexpr (std::is_same_v<Int, std::int64_t>) return checked_sub(a, b);
    else return a - b;
  }
  static Int gcd(Int a, Int b) {
    if constexpr (std::is_same_v<Int, std::int64_t>) return std::gcd(a, b);
    else return boost::multiprecision::gcd(a, b);
  }

  value_type from_sign(int s) const { return Int(s); }

  void eliminate(SparseColumn<Int>& col, const SparseColumn<Int>& piv, SparseColumn<Int>& scratch) const {
    Int a = piv.back().second, b = col.back().second;
    const Int g = gcd(a < 0 ? Int(-a) : a, b < 0 ? Int(-b) : b);
    a /= g;
    b /= g;
    scratch.clear();
    auto x = col.cbegin();
    auto y = piv.cbegin();
    while (x != col.cend() || y != piv.cend()) {
      if (y == piv.cend() || (x != col.cend() && x->first < y->first)) {
        scratch.emplace_back(x->first, mul(a, x->second));
        ++x;
      } else if (x == col.cend() || y->first < x->first) {
        scratch.emplace_back(y->first, sub(Int(0), mul(b, y->second)));
        ++y;
      } else {
        Int v = sub(mul(a, x->second), mul(b, y->second));
        if (v != 0) scratch.emplace_back(x->first, v);
        ++x, ++y;
      }
    }
    Int content = 0;
    for (auto& [r, v] : scratch) content = gcd(content, v < 0 ? Int(-v) : v);
    if (content > 1)
      for (auto& [r, v] : scratch) v /= content;
    col.swap(scratch);
  }
};

class FaceIndex {
 public:
  explicit FaceIndex(const std::vector<VarSet>& faces) {
    index_.reserve(faces.size() * 2);
    for (std::size_t i = 0; i < faces.size(); ++i) index_.emplace(faces[i], static_cast<int>(i));
  }
  int at(VarSet f) const { return index_.at(f); }

 private:
  std::unordered_map<VarSet, int> index_;
};

template <class Ring>
std::vector<long> reduce_all(const FacesByDimension& faces, const Ring& ring) {
  using T = typename Ring::value_type;
  const int top = static_cast<int>(faces.size()) - 2;  // top dimension
  std::vector<long> ranks(std::max(top + 1, 0), 0);
  std::vector<char> cleared;  // d-faces known to reduce to zero in ∂_d
  SparseColumn<T> col, scratch;
  for (int d = top; d >= 0; --d) {
    const auto& cols = faces[d + 1];
    const auto& rows = faces[d];
    FaceIndex row_index(rows);
    std::vector<SparseColumn<T>> pivot_of(rows.size());
    std::vector<char> next_cleared(rows.size(), 0);
    long rank = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!cleared.empty() && cleared[j]) continue;
      col.clear();
      int sign = 1;
      for_each_index(cols[j], [&](int v) {
        col.emplace_back(row_index.at(cols[j] & ~bit(v)), ring.from_sign(sign));
        sign = -sign;
      });
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      while (!col.empty() && !pivot_of[col.back().first].empty())
        ring.eliminate(col, pivot_of[col.back().first], scratch);
      if (!col.empty()) {
        ++rank;
        next_cleared[col.back().first] = 1;
        pivot_of[col.back().first] = std::move(col);
        col = {};
      }
    }
    ranks[d] = rank;
    cleared.swap(next_cleared);
  }
  return ranks;
}

}  // namespace

FieldSpec::FieldSpec(long characteristic) : p_(characteristic) {
  if (characteristic != 0 && (!is_prime(characteristic) || characteristic >= (1L << 31)))
    throw InputError("field characteristic must be 0 or a prime below 2^31, got " +
                     std::to_string(characteristic));
}

std::string FieldSpec::to_string() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

bool HomologyProfile::acyclic() const {
  return std::all_of(ranks.begin(), ranks.end(), [](long r) { return r == 0; });
}

int HomologyProfile::lowest_nonzero() const {
  for (std::size_t i = 0; i < ranks.size(); ++i)
    if (ranks[i] != 0) return static_cast<int>(i) - 1;
  return INT_MAX;
}

long HomologyProfile::euler_characteristic() const {
  long chi = 0;
  for (std::size_t i = 0; i < ranks.size(); ++i) chi += (i % 2 == 0 ? -1 : 1) * ranks[i];
  return chi;
}

void HomologyProfile::trim() {
  while (!ranks.empty() && ranks.back() == 0) ranks.pop_back();
}

bool HomologyProfile::operator==(const HomologyProfile& o) const {
  HomologyProfile a = *this, b = o;
  a.trim();
  b.trim();
  return a.ranks == b.ranks;
}

std::vector<long> boundary_ranks(const FacesByDimension& faces, const FieldSpec& field) {
  if (field.characteristic() != 0)
    return reduce_all(faces, ModP{static_cast<std::uint64_t>(field.characteristic())});
  try {
    return reduce_all(faces, Integers<std::int64_t>{});
  } catch (const Overflow&) {
    return reduce_all(faces, Integers<boost::multiprecision::cpp_int>{});
  }
}

HomologyProfile homology_from_faces(const FacesByDimension& faces, const FieldSpec& field) {
  HomologyProfile h;
  if (faces.empty()) return h;  // void complex
  const auto ranks = boundary_ranks(faces, field);
  const int top = static_cast<int>(faces.size()) - 2;
  h.ranks.assign(faces.size(), 0);
  for (int d = -1; d <= top; ++d) {
    const long fd = static_cast<long>(faces[d + 1].size());
    const long out = d >= 0 ? ranks[d] : 0;
    const long in = d + 1 <= top ? ranks[d + 1] : 0;
    h.ranks[d + 1] = fd - out - in;
  }
  h.trim();
  return h;
}

}  // namespace vwc
