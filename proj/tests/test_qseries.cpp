#include <doctest.h>

#include "eisen/errors.hpp"
#include "eisen/qseries.hpp"
#include "generators.hpp"

using namespace eisen;

namespace {

QSeries from(std::initializer_list<int> c) {
  std::vector<Rational> v;
  for (int x : c) v.emplace_back(x);
  return QSeries(std::move(v));
}

}  // namespace

TEST_CASE("series basics") {
  const QSeries a = from({1, 2, 3});
  CHECK(a.order() == 2);
  CHECK((a * a)[2] == Rational(10));
  CHECK(theta(a)[2] == Rational(6));
  CHECK(negate_q(a)[1] == Rational(-2));
  CHECK(pow(a, 0)[0] == Rational(1));
  CHECK(a.truncated(1).order() == 1);
  CHECK_THROWS(static_cast<void>(a.truncated(3)));
  CHECK_THROWS(QSeries(std::vector<Rational>{}));
  CHECK_THROWS_AS(invert(from({0, 1})), ZeroConstantTerm);
}

TEST_CASE("mixed orders truncate to the smaller") {
  const QSeries a = from({1, 1, 1, 1});
  const QSeries b = from({1, 1});
  CHECK((a + b).order() == 1);
  CHECK((a * b).order() == 1);
}

TEST_CASE("geometric series inverse") {
  const QSeries one_minus_q = from({1, -1, 0, 0, 0, 0});
  const QSeries inv = invert(one_minus_q);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(inv[n] == Rational(1));
}

TEST_CASE("first mismatch and strings") {
  const QSeries a = from({1, 2, 3});
  const QSeries b = from({1, 2, 4});
  const auto d = first_mismatch(a, b);
  REQUIRE(d);
  CHECK(d->n == 2);
  CHECK(d->lhs == Rational(3));
  CHECK_FALSE(first_mismatch(a, a));
  CHECK(to_strings(a * Rational(1, 2)) == std::vector<std::string>{"1/2", "1", "3/2"});
}

TEST_CASE("ring laws on random series") {
  gen::Source src(7);
  for (int i = 0; i < gen::kCases; ++i) {
    const std::size_t n = src.order();
    const QSeries a = src.series(n);
    const QSeries b = src.series(n);
    const QSeries c = src.series(n);
    CHECK_FALSE(first_mismatch(a + b, b + a));
    CHECK_FALSE(first_mismatch(a * b, b * a));
    CHECK_FALSE(first_mismatch((a * b) * c, a * (b * c)));
    CHECK_FALSE(first_mismatch(a * (b + c), a * b + a * c));
    CHECK_FALSE(first_mismatch(a - a, QSeries::zero(n)));
    CHECK_FALSE(first_mismatch(a * QSeries::one(n), a));
  }
}

TEST_CASE("theta is a derivation on random series") {
  gen::Source src(11);
  for (int i = 0; i < gen::kCases; ++i) {
    const std::size_t n = src.order();
    const QSeries a = src.series(n);
    const QSeries b = src.series(n);
    CHECK_FALSE(first_mismatch(theta(a * b), theta(a) * b + a * theta(b)));
    CHECK_FALSE(first_mismatch(theta(a + b), theta(a) + theta(b)));
  }
}

TEST_CASE("inverse and division on random units") {
  gen::Source src(13);
  for (int i = 0; i < gen::kCases; ++i) {
    const std::size_t n = src.order();
    const QSeries u = src.unit_series(n);
    const QSeries a = src.series(n);
    CHECK_FALSE(first_mismatch(u * invert(u), QSeries::one(n)));
    CHECK_FALSE(first_mismatch((a / u) * u, a));
    CHECK_FALSE(first_mismatch(negate_q(negate_q(a)), a));
    CHECK_FALSE(first_mismatch(negate_q(a * u), negate_q(a) * negate_q(u)));
  }
}

TEST_CASE("pow agrees with repeated products") {
  gen::Source src(17);
  for (int i = 0; i < gen::kCases; ++i) {
    const std::size_t n = src.order();
    const QSeries a = src.series(n);
    const auto e = static_cast<unsigned>(src.integer(0, 6));
    QSeries naive = QSeries::one(n);
    for (unsigned k = 0; k < e; ++k) naive = naive * a;
    CHECK_FALSE(first_mismatch(pow(a, e), naive));
  }
}

TEST_CASE("determinant laws on random matrices") {
  gen::Source src(19);
  for (int i = 0; i < gen::kCases; ++i) {
    const std::size_t n = src.order();
    const QSeries a = src.series(n);
    const QSeries b = src.series(n);
    const QSeries c = src.series(n);
    const QSeries d = src.series(n);
    const QSeries e = src.series(n);
    const QSeries f = src.series(n);
    // Equal rows give zero.
    CHECK(determinant({{a, b, c}, {a, b, c}, {d, e, f}}).is_zero());
    CHECK_FALSE(first_mismatch(determinant({{a, b}, {c, d}}), a * d - b * c));
    // Swapping rows flips the sign.
    CHECK_FALSE(first_mismatch(determinant({{a, b}, {c, d}}), -determinant({{c, d}, {a, b}})));
  }
}
