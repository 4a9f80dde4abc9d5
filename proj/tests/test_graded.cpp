#include <doctest.h>

#include "eisen/errors.hpp"
#include "eisen/graded.hpp"
#include "generators.hpp"

using namespace eisen;
using namespace eisen::level2;

namespace {

SeriesCatalog& shared_catalog() {
  static SeriesCatalog cat;
  return cat;
}

}  // namespace

TEST_CASE("weights and rendering") {
  CHECK(weight(Ring::Level2, {1, 1, 1}) == 8);
  CHECK(weight(Ring::Level1, {0, 1, 1}) == 10);
  CHECK((B() * C()).weight() == 6);
  CHECK_FALSE((B() + C()).weight());
  const GradedPoly e8 = Rational(9, 17) * B() * B() + Rational(8, 17) * B() * C() * C();
  CHECK(e8.to_string() == "9/17*B^2 + 8/17*B*C^2");
  CHECK(D().to_string() == "-1/64*B + 1/64*C^2");
  CHECK_THROWS_AS(B() + level1::E4(), RingMismatch);
}

TEST_CASE("serialize is sorted and exact") {
  const auto rec = serialize(Rational(1, 2) * A() + B());
  REQUIRE(rec.size() == 2);
  CHECK(rec[0].coeff == "1");
  CHECK(rec[1].a == 1);
  CHECK(rec[1].coeff == "1/2");
}

TEST_CASE("serre derivative examples") {
  CHECK(serre_delta(A()) == Rational(-1, 4) * (A() * A() + B()));
  CHECK(serre_delta(B()) == -(B() * C()));
  CHECK(serre_delta(C()) == Rational(-1, 2) * B());
  CHECK(serre_delta(C() * C()) == -(B() * C()));
  CHECK(serre_delta(B() * C()) == Rational(-1, 2) * B() * B() - B() * C() * C());
  CHECK(serre_delta(pow(C(), 3)) == Rational(-3, 2) * B() * C() * C());
  CHECK(serre_delta(D()).is_zero());
  CHECK(serre_partial(level1::E4()) == Rational(-1, 3) * level1::E6());
  CHECK(serre_partial(pow(level1::E4(), 3) - pow(level1::E6(), 2)).is_zero());
  CHECK_THROWS_AS(serre_delta(B() + C()), NotHomogeneous);
  CHECK_THROWS_AS(serre_delta(B(), 6), NotHomogeneous);
}

TEST_CASE("dimensions and decompositions") {
  CHECK(modular_dimension(2) == 1);
  CHECK(modular_dimension(8) == 3);
  CHECK(modular_dimension(12) == 4);
  auto& cat = shared_catalog();
  const auto dec = decompose_modular(cat.Estar(8, 20), 8, cat);
  CHECK(dec.to_poly().to_string() == "9/17*B^2 + 8/17*B*C^2");
  CHECK_THROWS_AS(decompose_modular(cat.A(20), 2, cat), ResidualMismatch);
  CHECK_THROWS_AS(decompose_modular(A() * B(), cat, 20), QuasiModularInput);
  CHECK_THROWS_AS(decompose_modular(level1::E4(), cat, 20), QuasiModularInput);
}

TEST_CASE("recursive E* polynomials") {
  auto& cat = shared_catalog();
  CHECK(e_star_poly(2, cat) == B());
  CHECK(e_star_poly(3, cat) == B() * C());
  CHECK(e_star_poly(4, cat).to_string() == "9/17*B^2 + 8/17*B*C^2");
  CHECK(e_star_poly(5, cat).to_string() == "27/31*B^2*C + 4/31*B*C^3");
  CHECK(e_star_poly(6, cat).to_string() == "189/691*B^3 + 486/691*B^2*C^2 + 16/691*B*C^4");
  for (int m = 2; m <= 20; ++m) CHECK(check_positivity(m, cat, 48));
}

TEST_CASE("serre derivative is a derivation on random polynomials") {
  gen::Source src(23);
  for (int i = 0; i < gen::kCases; ++i) {
    const int w1 = 2 * src.integer(1, 4);
    const int w2 = 2 * src.integer(1, 4);
    const GradedPoly f = src.homogeneous(Ring::Level2, w1);
    const GradedPoly g = src.homogeneous(Ring::Level2, w2);
    CHECK(serre_delta(f * g, w1 + w2) == serre_delta(f, w1) * g + f * serre_delta(g, w2));
    const GradedPoly f1 = src.homogeneous(Ring::Level1, w1);
    const GradedPoly g1 = src.homogeneous(Ring::Level1, w2);
    CHECK(serre_partial(f1 * g1, w1 + w2) ==
          serre_partial(f1, w1) * g1 + f1 * serre_partial(g1, w2));
  }
}

TEST_CASE("evaluation is a ring morphism on random polynomials") {
  gen::Source src(29);
  auto& cat = shared_catalog();
  const std::size_t n = 12;
  for (int i = 0; i < gen::kCases; ++i) {
    const Ring ring = src.integer(0, 1) ? Ring::Level1 : Ring::Level2;
    const GradedPoly f = src.homogeneous(ring, 2 * src.integer(1, 4));
    const GradedPoly g = src.homogeneous(ring, 2 * src.integer(1, 4));
    CHECK_FALSE(first_mismatch(evaluate(f * g, cat, n), evaluate(f, cat, n) * evaluate(g, cat, n)));
    CHECK_FALSE(first_mismatch(evaluate(f + g, cat, n), evaluate(f, cat, n) + evaluate(g, cat, n)));
  }
}

TEST_CASE("polynomial serre derivative matches the series operator") {
  gen::Source src(31);
  auto& cat = shared_catalog();
  const std::size_t n = 12;
  for (int i = 0; i < gen::kCases; ++i) {
    const int w = 2 * src.integer(1, 5);
    const GradedPoly f = src.homogeneous(Ring::Level2, w);
    const QSeries fs = evaluate(f, cat, n);
    CHECK_FALSE(first_mismatch(evaluate(serre_delta(f, w), cat, n),
                               theta(fs) - cat.A(n) * fs * Rational(w, 4)));
    const GradedPoly g = src.homogeneous(Ring::Level1, w);
    const QSeries gs = evaluate(g, cat, n);
    CHECK_FALSE(first_mismatch(evaluate(serre_partial(g, w), cat, n),
                               theta(gs) - cat.E(2, n) * gs * Rational(w, 12)));
  }
}

TEST_CASE("delta of basis monomials lies in B Q-[B, C]") {
  for (int k = 1; k <= 10; ++k) {
    for (int j = 0; 2 * j <= k; ++j) {
      const GradedPoly f =
          pow(B(), static_cast<unsigned>(j)) * pow(C(), static_cast<unsigned>(k - 2 * j));
      const GradedPoly df = serre_delta(f, 2 * k);
      REQUIRE_FALSE(df.is_zero());
      for (const auto& [m, c] : df.terms()) {
        CHECK(m.a == 0);
        CHECK(m.b >= 1);
        CHECK(c.sign() < 0);
      }
    }
  }
}

TEST_CASE("kernel of delta on M4 and the equal-derivative family") {
  gen::Source src(37);
  for (int i = 0; i < gen::kCases; ++i) {
    const Rational s = src.rational();
    CHECK(serre_delta(s * D(), 4).is_zero());
    // Any f in M4 has delta f = delta(f + s D).
    const GradedPoly f = src.modular(4);
    CHECK(serre_delta(f, 4) == serre_delta(f + s * D(), 4));
  }
  auto& cat = shared_catalog();
  const std::size_t n = 16;
  const QSeries A = cat.A(n);
  auto delta4 = [&](const QSeries& s) { return theta(s) - A * s; };
  const QSeries ref = delta4(cat.B(n));
  CHECK_FALSE(first_mismatch(delta4(cat.Estar(8, n) / cat.B(n)), ref));
  CHECK_FALSE(first_mismatch(delta4(cat.Estar(10, n) / cat.Estar(6, n)), ref));
  CHECK_FALSE(first_mismatch(delta4(cat.E(4, n)), ref));
  CHECK_FALSE(first_mismatch(delta4(cat.C(n) * cat.C(n)), ref));
}

TEST_CASE("decomposition round-trips on random modular polynomials") {
  gen::Source src(41);
  auto& cat = shared_catalog();
  for (int i = 0; i < gen::kCases; ++i) {
    const int w = 2 * src.integer(1, 7);
    const GradedPoly f = src.modular(w);
    if (f.is_zero()) continue;
    const auto dec = decompose_modular(f, cat, 24);
    CHECK(dec.to_poly() == f);
  }
}
