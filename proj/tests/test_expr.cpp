#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "voabim/errors.hpp"
#include "voabim/expr.hpp"
#include "voabim/voa.hpp"

using namespace voabim;

TEST_CASE("rational literals") {
  CHECK(parse_rational("0") == Rational());
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("22/7") == Rational(22, 7));
  CHECK(parse_rational(" -3/6 ") == Rational(-1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
  CHECK_THROWS_AS(parse_rational("x"), UsageError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), UsageError);
  CHECK_THROWS_AS(parse_rational(""), UsageError);
}

TEST_CASE("boson elements") {
  Voa H = Voa::heisenberg(8);
  GradedVector a = H.space().unit(1, 0);
  CHECK(parse_element(H, "vac") == H.vacuum());
  CHECK(parse_element(H, "a(-1)vac") == a);
  CHECK(parse_element(H, "a(-3)vac") == H.mode(a, -3, H.vacuum()));
  CHECK(parse_element(H, "2 a(-1)a(-2)vac") ==
        H.mode(a, -1, H.mode(a, -2, H.vacuum())).scaled(Rational(2)));
  GradedVector expect = H.mode(a, -2, H.vacuum()).scaled(Rational(-1, 2));
  expect.add_scaled(H.vacuum(), Rational(3));
  CHECK(parse_element(H, "-1/2 a(-2)vac + 3 vac") == expect);
  // like terms cancel exactly
  CHECK(parse_element(H, "a(-1)vac - a(-1)vac").is_zero());
}

TEST_CASE("Virasoro elements") {
  Voa U = Voa::virasoro_universal(Rational(1, 2), 8);
  CHECK(parse_element(U, "L(-2)vac") == U.omega());
  CHECK(parse_element(U, "L(-2)L(-2)vac") == U.virasoro(-2, U.omega()));
  CHECK(parse_element(U, "L(-3)vac") == U.virasoro(-3, U.vacuum()));

  // same grammar drives the quotient algebra
  Voa I = Voa::ising(8);
  CHECK(parse_element(I, "L(-2)vac") == I.omega());
  CHECK(!parse_element(I, "L(-2)L(-2)L(-2)vac").is_zero());
}

TEST_CASE("rejected input") {
  Voa H = Voa::heisenberg(6);
  Voa U = Voa::virasoro_universal(Rational(1, 2), 6);
  CHECK_THROWS_AS(parse_element(H, ""), UsageError);
  CHECK_THROWS_AS(parse_element(H, "a(-1)"), UsageError);       // no vac tail
  CHECK_THROWS_AS(parse_element(H, "L(-2)vac"), UsageError);    // wrong family
  CHECK_THROWS_AS(parse_element(U, "a(-1)vac"), UsageError);
  CHECK_THROWS_AS(parse_element(U, "L(-1)vac"), UsageError);    // below range
  CHECK_THROWS_AS(parse_element(H, "a(0)vac"), UsageError);
  CHECK_THROWS_AS(parse_element(H, "a(-1)vax"), UsageError);
  CHECK_THROWS_AS(parse_element(H, "1/0 vac"), UsageError);
  CHECK_THROWS_AS(parse_element(H, "a(-1)vac + "), UsageError);
  // over the built weight range
  CHECK_THROWS_AS(parse_element(H, "a(-7)vac"), WeightRangeError);
  CHECK_THROWS_AS(parse_element(H, "a(-4)a(-4)vac"), WeightRangeError);
}

TEST_CASE("error messages carry the offending position") {
  Voa H = Voa::heisenberg(6);
  try {
    parse_element(H, "a(-1)zac");
    FAIL("expected a parse error");
  } catch (const UsageError &e) {
    std::string msg = e.what();
    CHECK(msg.find("position") != std::string::npos);
  }
}
