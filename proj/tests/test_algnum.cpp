#include <doctest.h>

#include "fortcad/algnum.hpp"

using namespace fortcad;

namespace {
Poly from_ints(std::initializer_list<long> cs) {
  std::vector<Rat> v;
  for (long c : cs) v.emplace_back(c);
  return Poly(std::move(v));
}
}  // namespace

TEST_CASE("simplest rational in interval") {
  CHECK(simplest_rational_in(rat(1, 3), rat(1, 2)) == rat(1, 2));
  CHECK(simplest_rational_in(rat(2, 7), rat(3, 7)) == rat(1, 3));
  CHECK(simplest_rational_in(rat(-1, 2), rat(1, 3)) == Rat(0));
  CHECK(simplest_rational_in(rat(141, 100), rat(142, 100)) == rat(17, 12));
  CHECK(simplest_rational_in(rat(7, 5), rat(7, 5)) == rat(7, 5));
}

TEST_CASE("algebraic numbers: sqrt2") {
  AlgNum r = AlgNum::root_of(from_ints({-2, 0, 1}), Rat(1), Rat(2));
  CHECK(!r.is_rational());
  CHECK(r.cmp(rat(7, 5)) > 0);       // sqrt2 > 1.4
  CHECK(r.cmp(rat(3, 2)) < 0);       // sqrt2 < 1.5
  CHECK(r.sign_of(from_ints({-2, 0, 1})) == 0);
  CHECK(r.sign_of(from_ints({-3, 0, 1})) < 0);  // 2 - 3 < 0
  QInterval e = r.enclosure(rat(1, 1000));
  CHECK(e.hi() - e.lo() <= rat(1, 1000));
  CHECK(e.lo() < rat(1415, 1000));
  CHECK(e.hi() > rat(1414, 1000));

  AlgNum sq = r.apply_poly(from_ints({0, 0, 1}));
  CHECK(sq.is_rational());
  CHECK(sq.rational() == Rat(2));

  AlgNum shifted = r.affine(Rat(1), Rat(2));  // 1 + 2*sqrt2
  CHECK(shifted.cmp(rat(38, 10)) > 0);
  CHECK(shifted.cmp(rat(383, 100)) < 0);
}

TEST_CASE("rational root detection inside root_of") {
  // x^2 - x + 3/16 = (x - 1/4)(x - 3/4)
  Poly p(std::vector<Rat>{rat(3, 16), Rat(-1), Rat(1)});
  AlgNum a = AlgNum::root_of(p, Rat(0), rat(1, 2));
  CHECK(a.is_rational());
  CHECK(a.rational() == rat(1, 4));
}

TEST_CASE("exact comparison of equal values with different polynomials") {
  // sqrt2 as root of x^2-2 and of (x^2-2)(x-3)
  AlgNum a = AlgNum::root_of(from_ints({-2, 0, 1}), Rat(1), Rat(2));
  AlgNum b = AlgNum::root_of(from_ints({-2, 0, 1}) * from_ints({-3, 1}), Rat(1), Rat(2));
  CHECK(a.cmp(b) == 0);
  AlgNum c = AlgNum::root_of(from_ints({-3, 0, 1}), Rat(1), Rat(2));  // sqrt3
  CHECK(a.cmp(c) < 0);
  CHECK(c.cmp(a) > 0);
}

TEST_CASE("identical twins compare equal (no infinite refinement)") {
  AlgNum a = AlgNum::root_of(from_ints({-2, 0, 1}), Rat(1), Rat(2));
  AlgNum b = AlgNum::root_of(from_ints({-2, 0, 1}), Rat(1), Rat(2));
  CHECK(a.cmp(b) == 0);
}

TEST_CASE("monotone preimage") {
  // y^2 on [1,2] is increasing; preimage of 2 is sqrt2
  AlgNum two(Rat(2));
  auto pre = two.monotone_preimage(from_ints({0, 0, 1}), Rat(1), Rat(2));
  REQUIRE(pre.has_value());
  AlgNum expect = AlgNum::root_of(from_ints({-2, 0, 1}), Rat(1), Rat(2));
  CHECK(pre->cmp(expect) == 0);

  // preimage of an irrational value: f = x^2, target sqrt2 -> 2^(1/4)
  AlgNum s2 = expect;
  auto pre2 = s2.monotone_preimage(from_ints({0, 0, 1}), Rat(1), Rat(2));
  REQUIRE(pre2.has_value());
  CHECK(pre2->apply_poly(from_ints({0, 0, 0, 0, 1})).cmp(Rat(2)) == 0);  // (2^(1/4))^4 = 2

  // out of range
  AlgNum ten(Rat(10));
  CHECK(!ten.monotone_preimage(from_ints({0, 0, 1}), Rat(1), Rat(2)).has_value());

  // endpoint hits
  AlgNum one(Rat(1));
  auto pe = one.monotone_preimage(from_ints({0, 0, 1}), Rat(1), Rat(2));
  REQUIRE(pe.has_value());
  CHECK(pe->is_rational());
  CHECK(pe->rational() == Rat(1));
}

TEST_CASE("decreasing monotone preimage") {
  // f = 1 - x on [0,1], preimage of 1/3 is 2/3
  AlgNum t(rat(1, 3));
  auto pre = t.monotone_preimage(from_ints({1, -1}), Rat(0), Rat(1));
  REQUIRE(pre.has_value());
  CHECK(pre->is_rational());
  CHECK(pre->rational() == rat(2, 3));
}
