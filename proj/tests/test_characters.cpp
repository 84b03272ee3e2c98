#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bozec/characters.hpp"
#include "bozec/modules.hpp"
#include "bozec/qcombinat.hpp"
#include "test_data.hpp"

using namespace bozec;
using namespace bozec::testdata;

namespace {

RootWeight rw(std::initializer_list<long> v) { return RootWeight(v); }

CharacterSeries unit_series(size_t rank, long depth) {
  CharacterSeries s(std::vector<long>(rank, 0), depth);
  s.add(RootWeight(rank, 0), 1);
  return s;
}

// universal highest-weight character from the lowering-half dimensions
CharacterSeries verma_series(VermaModule& m, long depth) {
  CharacterSeries s(std::vector<long>(m.datum().n(), 0), depth);
  for (const RootWeight& b : offsets_up_to(m.datum(), depth))
    s.add(b, static_cast<long>(m.dim(b)));
  return s;
}

// the denominator the formula divides by, rebuilt from public pieces
CharacterSeries denominator(const CartanDatum& dat, long depth,
                            const OddIsoCoef& hook = nullptr) {
  std::vector<long> zero(dat.n(), 0);
  CharacterSeries s0 = build_S(dat, zero, depth, hook);
  CharacterSeries d(zero, depth);
  for (const OrbitPoint& op : weyl_orbit_bfs(dat, dat.rho(), depth))
    for (const auto& [off, v] : s0.coeffs())
      d.add(rw_add(op.offset, apply_word_to_root(dat, op.word, off)),
            op.sign() * v);
  return d;
}

} // namespace

TEST_CASE("series division is exact and guarded") {
  CharacterSeries geo(std::vector<long>{0}, 6);
  for (long k = 0; k <= 6; ++k) geo.add(rw({k}), 1);
  CharacterSeries den(std::vector<long>{0}, 6);
  den.add(rw({0}), 1);
  den.add(rw({1}), -1);
  CHECK(divide(unit_series(1, 6), den) == geo);
  CHECK(divide(geo * den, den) == geo);

  CharacterSeries bad(std::vector<long>{0}, 6);
  bad.add(rw({0}), 2);
  CHECK_THROWS_AS(divide(unit_series(1, 6), bad), std::logic_error);
}

TEST_CASE("real-index data admit only the empty correction") {
  for (const CartanDatum& dat : {a1_even(), a1_odd(), a2(), b2()}) {
    std::vector<long> zero(dat.n(), 0);
    auto evens = enumerate_E(dat, zero, 5);
    auto odds = enumerate_O(dat, zero, 5);
    REQUIRE(evens.size() == 1);
    REQUIRE(odds.size() == 1);
    CHECK(height(evens[0].total) == 0);
    CHECK(evens[0].sign == 1);
    CHECK(build_S(dat, zero, 5) == unit_series(dat.n(), 5));
  }
}

TEST_CASE("isotropic corrections expand the euler product") {
  CartanDatum dat = borcherds_iso();
  std::vector<long> lam = {2, 0};

  CharacterSeries s = build_S(dat, lam, 6);
  CharacterSeries prod = unit_series(2, 6);
  for (long k = 1; k <= 6; ++k) {
    CharacterSeries f(std::vector<long>(2, 0), 6);
    f.add(rw({0, 0}), 1);
    f.add(rw({0, k}), -1);
    prod = prod * f;
  }
  CHECK(s == prod);

  // a weight pairing nonzero with the isotropic root shuts the corrections off
  CHECK(build_S(dat, {2, 1}, 6) == unit_series(2, 6));
}

TEST_CASE("non-isotropic corrections are signed singletons") {
  // even imaginary index with self-pairing -2: repeats would pair nonzero
  CartanDatum dat({{"0", 0, 1, {}}, {"1", 0, 1, {}}}, {{2, -1}, {-1, -2}});
  dat.require_valid();
  CharacterSeries s = build_S(dat, {1, 0}, 5);
  CharacterSeries want = unit_series(2, 5);
  for (long a = 1; a <= 5; ++a) want.add(rw({0, a}), -1);
  CHECK(s == want);
}

TEST_CASE("cross-pairing support is excluded, orthogonal support multiplies") {
  // two isotropic indices pairing -1: never together in one correction
  CartanDatum linked({{"0", 0, 1, {}}, {"1", 0, 1, {}}}, {{0, -1}, {-1, 0}});
  linked.require_valid();
  for (const CorrectionTerm& t : enumerate_E(linked, {0, 0}, 6))
    CHECK((t.total[0] == 0 || t.total[1] == 0));

  // orthogonal isotropic indices combine with multiplied signs
  CartanDatum split({{"0", 0, 1, {}}, {"1", 0, 1, {}}}, {{0, 0}, {0, 0}});
  split.require_valid();
  std::vector<long> phi = euler_phi_coeffs(6);
  CharacterSeries s = build_S(split, {0, 0}, 6);
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; a + b <= 6; ++b)
      CHECK(s.at(rw({a, b})) == phi[a] * phi[b]);
}

TEST_CASE("odd corrections need the coefficient hook only when isotropic") {
  CartanDatum dat = odd_iso();
  CHECK_THROWS_AS(enumerate_O(dat, {2, 0}, 4), std::runtime_error);
  CHECK_NOTHROW(enumerate_O(dat, {2, 1}, 4)); // nonzero pairing disqualifies

  // supplying a hook routes the coefficient through it
  OddIsoCoef zero_hook = [](const std::vector<long>&, const RootWeight&) {
    return 0L;
  };
  CHECK(build_S(dat, {2, 0}, 4, zero_hook) == unit_series(2, 4));

  // odd non-isotropic indices use the position sign and need no hook
  CartanDatum nodd = borcherds_odd();
  CharacterSeries s = build_S(nodd, {2, 0}, 5);
  CharacterSeries want = unit_series(2, 5);
  for (long b = 1; b <= 5; ++b) want.add(rw({0, b}), -1);
  CHECK(s == want);
}

TEST_CASE("rank one strings match the closed form") {
  CartanDatum dat = a1_even();
  for (long m = 0; m <= 3; ++m) {
    CharacterSeries ch = formula_character(dat, {m}, 5);
    CHECK(ch.anchor() == std::vector<long>{m});
    for (long k = 0; k <= 5; ++k) CHECK(ch.at(rw({k})) == (k <= m ? 1 : 0));
  }
}

TEST_CASE("trivial weight gives the trivial character") {
  for (const CartanDatum& dat :
       {a1_even(), a1_odd(), a2(), b2(), borcherds_iso(), borcherds_odd()}) {
    std::vector<long> zero(dat.n(), 0);
    CharacterSeries ch = formula_character(dat, zero, 4);
    CHECK(ch == unit_series(dat.n(), 4).reanchored(zero));
  }
}

TEST_CASE("denominator inverts the universal character") {
  for (const CartanDatum& dat :
       {a1_even(), a1_odd(), a2(), b2(), borcherds_iso(), borcherds_odd()}) {
    long depth = 4;
    std::vector<long> zero(dat.n(), 0);
    VermaModule m(dat, zero, depth);
    CharacterSeries prod = denominator(dat, depth) * verma_series(m, depth);
    CHECK(prod == unit_series(dat.n(), depth));
  }
}

TEST_CASE("formula agrees with the module quotient characters") {
  struct Case {
    CartanDatum dat;
    std::vector<long> lam;
    long depth;
  };
  std::vector<Case> cases = {
      {a1_even(), {2}, 5},   {a1_odd(), {2}, 5},        {a2(), {1, 1}, 4},
      {a2(), {2, 0}, 4},     {b2(), {0, 1}, 4},         {b2(), {1, 0}, 4},
      {borcherds_iso(), {2, 0}, 4}, {borcherds_iso(), {2, 1}, 4},
      {borcherds_odd(), {2, 0}, 4},
  };
  for (const Case& c : cases) {
    CAPTURE(c.lam);
    VermaModule m(c.dat, c.lam, c.depth);
    CharacterSeries ch = formula_character(c.dat, c.lam, c.depth);
    CHECK(ch.coeffs() == m.quotient_character());
  }
}

TEST_CASE("deeper runs extend shallower ones") {
  struct Case {
    CartanDatum dat;
    std::vector<long> lam;
  };
  std::vector<Case> cases = {{a2(), {1, 1}}, {borcherds_iso(), {2, 1}}};
  for (const Case& c : cases) {
    CharacterSeries lo = formula_character(c.dat, c.lam, 3);
    CharacterSeries hi = formula_character(c.dat, c.lam, 5);
    for (const auto& [off, v] : hi.coeffs())
      if (height(off) <= 3) CHECK(lo.at(off) == v);
    for (const auto& [off, v] : lo.coeffs()) CHECK(hi.at(off) == v);
  }
}

TEST_CASE("invalid weights are rejected") {
  CHECK_THROWS_AS(formula_character(a1_even(), {-1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(formula_character(a1_odd(), {1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(formula_character(a2(), {1}, 3), std::invalid_argument);
  // the denominator needs the weight-zero corrections, so the odd isotropic
  // hook is required even when lambda itself pairs nonzero
  CHECK_THROWS_AS(formula_character(odd_iso(), {2, 1}, 3), std::runtime_error);
}
