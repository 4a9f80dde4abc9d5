#include <doctest.h>

#include "eisen/errors.hpp"
#include "eisen/rational.hpp"
#include "generators.hpp"

using eisen::Rational;

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(-6, -4).to_string() == "3/2");
  CHECK(Rational(3, -9).to_string() == "-1/3");
  CHECK(Rational(8, 4).to_string() == "2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational::parse("-12/517") == Rational(-12, 517));
  CHECK(Rational::parse("37928/32") == Rational(4741, 4));
  CHECK(Rational::parse("7") == Rational(7));
}

TEST_CASE("rational errors") {
  CHECK_THROWS_AS(Rational(1, 0), eisen::DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), eisen::DivisionByZero);
  CHECK_THROWS(Rational::parse("1/"));
  CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2).sign() == -1);
  CHECK(eisen::parity_sign(3) == -1);
  CHECK(eisen::parity_sign(4) == 1);
}

TEST_CASE("rational field laws on random inputs") {
  eisen::gen::Source src;
  for (int i = 0; i < eisen::gen::kCases; ++i) {
    const Rational a = src.rational();
    const Rational b = src.rational();
    const Rational c = src.rational();
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rational::parse(a.to_string()) == a);
  }
}
