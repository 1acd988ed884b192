#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "voabim/rational.hpp"

using namespace voabim;

// falling-factorial form, written out independently of the library routine
static Rational binom_by_product(long a, long k) {
  if (k < 0)
    return Rational();
  Rational r(1);
  for (long i = 1; i <= k; ++i)
    r = r * Rational(a - i + 1, i);
  return r;
}

TEST_CASE("construction and predicates") {
  Rational z;
  CHECK(z.is_zero());
  CHECK(z.is_integer());
  CHECK(z.sign() == 0);
  CHECK(z.str() == "0");

  Rational half(1, 2);
  CHECK(!half.is_zero());
  CHECK(!half.is_integer());
  CHECK(half.sign() == 1);
  CHECK(half.str() == "1/2");

  // normalization happens at construction
  CHECK(Rational(2, 4) == half);
  CHECK(Rational(-3, -6) == half);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(-1, 2).sign() == -1);

  CHECK(Rational::from_string("22/7") == Rational(22, 7));
  CHECK(Rational::from_string("-5") == Rational(-5));
}

TEST_CASE("arithmetic") {
  Rational a(3, 4), b(5, 6);
  CHECK(a + b == Rational(19, 12));
  CHECK(a - b == Rational(-1, 12));
  CHECK(a * b == Rational(5, 8));
  CHECK(a / b == Rational(9, 10));
  CHECK(-a == Rational(-3, 4));
  CHECK(a < b);
  CHECK(!(b < a));

  Rational s;
  for (int i = 1; i <= 10; ++i)
    s += Rational(1, i) - Rational(1, i + 1);
  CHECK(s == Rational(10, 11));
}

TEST_CASE("long round trip") {
  Rational big = Rational(1);
  for (int i = 0; i < 40; ++i)
    big *= Rational(10);
  CHECK(!big.fits_long());
  CHECK(Rational(123).fits_long());
  CHECK(Rational(123).to_long() == 123);
  CHECK(Rational(-7).to_long() == -7);
}

TEST_CASE("binomials match the product formula") {
  for (long a = -10; a <= 10; ++a)
    for (long k = -2; k <= 12; ++k)
      CHECK(binom(a, k) == binom_by_product(a, k));
}

TEST_CASE("binomial special values") {
  CHECK(binom(0, 0) == Rational(1));
  CHECK(binom(5, 2) == Rational(10));
  CHECK(binom(4, 7) == Rational());       // above the row
  CHECK(binom(-1, 3) == Rational(-1));    // (-1)^k
  CHECK(binom(-2, 2) == Rational(3));
  CHECK(binom(7, -1) == Rational());
}

TEST_CASE("Pascal rule holds for negative upper index too") {
  for (long a = -8; a <= 8; ++a)
    for (long k = 1; k <= 8; ++k)
      CHECK(binom(a, k) == binom(a - 1, k - 1) + binom(a - 1, k));
}

TEST_CASE("binomial table agrees with the free function") {
  BinomialTable tab;
  for (long a = -6; a <= 9; ++a)
    for (long k = 0; k <= 9; ++k)
      CHECK(tab.get(a, k) == binom(a, k));
  // repeated lookups return the cached value
  CHECK(tab.get(-6, 9) == binom(-6, 9));
}
