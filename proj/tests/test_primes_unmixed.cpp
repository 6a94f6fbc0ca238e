#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "vwc/datasets.hpp"
#include "vwc/errors.hpp"
#include "vwc/primes.hpp"

using namespace vwc;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

std::vector<VarSet> primes_of(const MonomialIdeal& i) { return oracle::sorted_lex(minimal_primes(i).primes); }

MonomialIdeal random_squarefree(std::mt19937_64& rng, int n, int gens) {
  std::vector<Monomial> raw;
  for (int k = 0; k < gens; ++k) {
    std::vector<std::uint32_t> e(n, 0);
    const int size = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < size; ++t) e[rng() % n] = 1;
    raw.emplace_back(e);
  }
  return minimal_generators(raw, n);
}

MonomialIdeal random_monomial(std::mt19937_64& rng, int n, int gens, int max_exp) {
  std::vector<Monomial> raw;
  for (int k = 0; k < gens; ++k) {
    std::vector<std::uint32_t> e(n, 0);
    const int size = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < size; ++t) e[rng() % n] = 1 + static_cast<std::uint32_t>(rng() % max_exp);
    raw.emplace_back(e);
  }
  return minimal_generators(raw, n);
}

/// Height through the radical: smallest transversal of the generator supports.
int radical_height(const MonomialIdeal& i) {
  int best = i.nvars() + 1;
  for (VarSet t : oracle::minimal_transversals(i.nvars(), i.supports())) best = std::min(best, count(t));
  return best;
}

}  // namespace

TEST_CASE("minimal primes of small edge ideals") {
  const MonomialIdeal tri(3, {mono({1, 1, 0}), mono({0, 1, 1}), mono({1, 0, 1})});
  CHECK(primes_of(tri) == std::vector<VarSet>{0b011, 0b101, 0b110});

  // P4 on x1, x2, y1, y2 = variables 0..3: x1y1, x1x2, x2y2.
  const MonomialIdeal p4(4, {mono({1, 0, 1, 0}), mono({1, 1, 0, 0}), mono({0, 1, 0, 1})});
  const auto ps = primes_of(p4);
  CHECK(ps == oracle::sorted_lex({from_indices({0, 1}), from_indices({2, 1}), from_indices({0, 3})}));
  CHECK(minimal_primes(p4).equicardinal());

  CHECK_THROWS_AS(minimal_primes(MonomialIdeal(1, {mono({2})})), InputError);
}

TEST_CASE("minimal primes of the polarized D1 all have height 8") {
  const PrimeList pl = minimal_primes(polarize(datasets::example("D1").ideal).ideal);
  CHECK_FALSE(pl.primes.empty());
  for (int h : pl.heights()) CHECK(h == 8);
}

TEST_CASE("height and dimension") {
  CHECK(height(MonomialIdeal(2, {mono({2, 0}), mono({1, 1})})) == 1);
  CHECK(height(edge_ideal(datasets::graph_g())) == 8);
  CHECK(height(MonomialIdeal(3, {mono({2, 1, 3})})) == 1);
  CHECK(krull_dim(datasets::example("D1").ideal) == 3);
  CHECK(krull_dim(datasets::example("D2").ideal) == 3);
  CHECK(krull_dim(MonomialIdeal(2, {mono({1, 1})})) == 1);
}

TEST_CASE("unmixedness of weighted paths") {
  // variables x1, x2, y1, y2
  const MonomialIdeal good(4, {mono({2, 0, 2, 0}), mono({1, 1, 0, 0}), mono({0, 3, 0, 3})});
  CHECK(is_unmixed(good).verdict());

  const MonomialIdeal bad(4, {mono({1, 0, 1, 0}), mono({2, 2, 0, 0}), mono({0, 1, 0, 1})});
  const CriterionReport r = is_unmixed(bad);
  REQUIRE_FALSE(r.verdict());
  const Violation& v = r.violations().front();
  CHECK(v.clause == "mixed-heights");
  REQUIRE(v.sets.size() == 2);
  CHECK(v.sets[0].size() == 2);
  CHECK(v.sets[1].size() == 3);
  // {x1_1, x2_1} and {y1_1, x1_2, y2_1} in the 1-based reading.
  const auto pol = polarize(bad);
  const auto oracle_primes = oracle::minimal_transversals(pol.ideal.nvars(), pol.ideal.supports());
  CHECK(std::find(oracle_primes.begin(), oracle_primes.end(), from_indices({0, 2})) != oracle_primes.end());
  CHECK(std::find(oracle_primes.begin(), oracle_primes.end(), from_indices({1, 4, 5})) != oracle_primes.end());
  CHECK(pol.names(from_indices({1, 4, 5})) == std::vector<std::string>{"x0_2", "x2_1", "x3_1"});
}

TEST_CASE("unmixedness of the weighted examples") {
  CHECK(is_unmixed(datasets::example("Gw1").ideal).verdict());
  CHECK(is_unmixed(datasets::example("Gw2").ideal).verdict());
}

TEST_CASE("minimal primes match exhaustive enumeration up to 16 variables") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const MonomialIdeal i = random_squarefree(rng, n, 1 + static_cast<int>(rng() % 10));
    const auto expected = oracle::minimal_transversals(n, i.supports());
    CHECK(primes_of(i) == expected);
    for (VarSet p : expected) {
      for (VarSet g : i.supports()) CHECK((p & g) != 0);
    }
    CHECK(min_transversal_size(i.supports()) == radical_height(i));
    CHECK(is_unmixed(i).verdict() == minimal_primes(i).equicardinal());
  }
}

TEST_CASE("transversal edge cases") {
  CHECK(minimal_transversals(std::vector<VarSet>{}) == std::vector<VarSet>{0});
  CHECK(minimal_transversals(std::vector<VarSet>{0}).empty());
  CHECK(min_transversal_size(std::vector<VarSet>{0b1, 0}) == -1);
}

TEST_CASE("polarization preserves height and unmixedness") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const MonomialIdeal i = random_monomial(rng, n, 1 + static_cast<int>(rng() % 6), 3);
    const auto pol = oracle::polarize(i);
    if (pol.nvars > 16) continue;
    const auto primes = oracle::minimal_transversals(pol.nvars, pol.gens);
    int lo = 64, hi = 0;
    for (VarSet p : primes) {
      lo = std::min(lo, count(p));
      hi = std::max(hi, count(p));
    }
    CHECK(height(i) == lo);
    CHECK(height(i) == radical_height(i));
    CHECK(krull_dim(i) == n - lo);
    CHECK(is_unmixed(i).verdict() == (lo == hi));
  }
}

TEST_CASE("unmixedness refuses inputs over the variable cap") {
  CHECK_THROWS_AS(is_unmixed(MonomialIdeal(2, {mono({20, 20})})), ResourceLimitError);
  CHECK(is_unmixed(MonomialIdeal(2, {mono({20, 20})}), Limits{40}).verdict());
}
