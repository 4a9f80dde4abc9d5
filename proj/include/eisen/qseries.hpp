#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eisen/rational.hpp"

namespace eisen {

/// Truncated power series c_0 + c_1 q + ... + c_N q^N over Rational.
///
/// Binary operations truncate to the smaller of the two orders; nothing is
/// ever padded with zeros past the computed precision.
class QSeries {
 public:
  /// Needs at least one coefficient.
  explicit QSeries(std::vector<Rational> coeffs);

  static QSeries constant(const Rational& c, std::size_t order);
  static QSeries zero(std::size_t order) { return constant(Rational(0), order); }
  static QSeries one(std::size_t order) { return constant(Rational(1), order); }

  [[nodiscard]] std::size_t order() const { return coeffs_.size() - 1; }
  [[nodiscard]] const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  [[nodiscard]] std::span<const Rational> coefficients() const { return coeffs_; }

  /// Drops every term above q^order. Requires order <= this->order().
  [[nodiscard]] QSeries truncated(std::size_t order) const;
  [[nodiscard]] bool is_zero() const;

  QSeries& operator+=(const QSeries& rhs);
  QSeries& operator-=(const QSeries& rhs);
  QSeries& operator*=(const Rational& s);

  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rational& s) { return a *= s; }
  friend QSeries operator*(const Rational& s, QSeries a) { return a *= s; }
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend QSeries operator/(const QSeries& a, const QSeries& b);
  QSeries operator-() const;

 private:
  std::vector<Rational> coeffs_;
};

/// q d/dq: c_n -> n c_n.
QSeries theta(const QSeries& a);

/// Multiplicative inverse; throws ZeroConstantTerm when c_0 = 0.
QSeries invert(const QSeries& a);

/// q -> -q: c_n -> (-1)^n c_n.
QSeries negate_q(const QSeries& a);

/// a^e by binary exponentiation, a^0 = 1.
QSeries pow(const QSeries& a, unsigned e);

/// Determinant of a square matrix of series by cofactor expansion.
QSeries determinant(const std::vector<std::vector<QSeries>>& m);

/// First exponent where two series differ on their common range.
struct Discrepancy {
  std::size_t n = 0;
  Rational lhs;
  Rational rhs;
};

std::optional<Discrepancy> first_mismatch(const QSeries& lhs, const QSeries& rhs);

/// Coefficients as exact-rational strings "p/q" ("p" when q = 1).
std::vector<std::string> to_strings(const QSeries& a);

}  // namespace eisen
