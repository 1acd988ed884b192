#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "voabim/laurent.hpp"

#include <stdexcept>

using namespace voabim;

static LaurentPoly zpow(int e, long c = 1) {
  return LaurentPoly::monomial({"z"}, {e, 0}, Rational(c));
}

TEST_CASE("term bookkeeping") {
  LaurentPoly p({"z"});
  CHECK(p.is_zero());
  p.add_term({3, 0}, Rational(2));
  p.add_term({-1, 0}, Rational(1, 2));
  p.add_term({3, 0}, Rational(-2)); // cancels, term must disappear
  CHECK(p.term_count() == 1);
  CHECK(p.coeff({-1, 0}) == Rational(1, 2));
  CHECK(p.coeff({3, 0}) == Rational());
}

TEST_CASE("ring operations") {
  // (z + z^{-1})^2 = z^2 + 2 + z^{-2}
  LaurentPoly s = zpow(1) + zpow(-1);
  LaurentPoly sq = s * s;
  CHECK(sq.coeff({2, 0}) == Rational(1));
  CHECK(sq.coeff({0, 0}) == Rational(2));
  CHECK(sq.coeff({-2, 0}) == Rational(1));
  CHECK(sq.term_count() == 3);

  // (a+b)(a-b) = a^2 - b^2
  LaurentPoly a = zpow(5, 3) + zpow(-2, 7);
  LaurentPoly b = zpow(1, 2);
  CHECK((a + b) * (a - b) == a * a - b * b);
  CHECK(a * Rational(1, 7) ==
        zpow(5, 3) * Rational(1, 7) + LaurentPoly::monomial({"z"}, {-2, 0}, Rational(1)));
}

TEST_CASE("residue extracts the z^{-1} coefficient") {
  LaurentPoly p = zpow(-1, 4) + zpow(0, 9) + zpow(-3, 5);
  CHECK(p.residue("z").as_rational() == Rational(4));
  CHECK((zpow(2) * zpow(-3)).residue("z").as_rational() == Rational(1));
  CHECK(zpow(0).residue("z").is_zero());
}

TEST_CASE("derivative") {
  // d/dz (2 z^3 - z^{-2}) = 6 z^2 + 2 z^{-3}
  LaurentPoly p = zpow(3, 2) - zpow(-2);
  LaurentPoly d = p.derivative("z");
  CHECK(d == zpow(2, 6) + zpow(-3, 2));
  // residue of any derivative vanishes
  CHECK(d.residue("z").is_zero());
  CHECK((zpow(-1, 11)).derivative("z") == zpow(-2, -11));
}

TEST_CASE("two variables") {
  LaurentPoly x = LaurentPoly::monomial({"z1", "z2"}, {1, 0}, Rational(1));
  LaurentPoly y = LaurentPoly::monomial({"z1", "z2"}, {0, 1}, Rational(1));
  // (x + y)^3, then the z1^{-1} residue of (x + y)^3 / x^2
  LaurentPoly cube = (x + y) * (x + y) * (x + y);
  CHECK(cube.coeff({2, 1}) == Rational(3));
  LaurentPoly xinv2 = LaurentPoly::monomial({"z1", "z2"}, {-2, 0}, Rational(1));
  LaurentPoly res = (cube * xinv2).residue("z1");
  // picks out the x^1 y^2 term: 3 y^2, with z1 consumed by the residue
  CHECK(res == LaurentPoly::monomial({"z2"}, {2, 0}, Rational(3)));
  CHECK_THROWS_AS(res.as_rational(), std::logic_error);
}

TEST_CASE("binomial power expansion") {
  // exact when the exponent is nonnegative
  LaurentPoly p = expand_binomial_power("z", 4, 99);
  CHECK(p.coeff({0, 0}) == Rational(1));
  CHECK(p.coeff({2, 0}) == Rational(6));
  CHECK(p.coeff({4, 0}) == Rational(1));
  CHECK(p.coeff({5, 0}) == Rational());

  // truncated geometric-type series: (1+z)^{-2} = 1 - 2z + 3z^2 - ...
  LaurentPoly q = expand_binomial_power("z", -2, 5);
  CHECK(q.coeff({3, 0}) == Rational(-4));
  CHECK(q.coeff({5, 0}) == Rational(-6));

  // shifted base exponent drops into z^{2k}
  LaurentPoly r = expand_binomial_power("z", 3, 99, 2);
  CHECK(r.coeff({4, 0}) == Rational(3));
  CHECK(r.coeff({3, 0}) == Rational());

  // multiplying the truncated inverse back recovers 1 up to the cut
  LaurentPoly one = expand_binomial_power("z", 1, 0) * expand_binomial_power("z", -1, 8);
  for (int e = 1; e <= 8; ++e)
    CHECK(one.coeff({e, 0}) == Rational());
  CHECK(one.coeff({0, 0}) == Rational(1));
}
