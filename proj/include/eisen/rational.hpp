#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eisen {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes,
/// and division by zero throws DivisionByZero instead of trapping.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  Rational(unsigned long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long long num, long long den);

  /// Parses "p" or "p/q" with optional leading sign.
  static Rational parse(std::string_view text);

  [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  /// "p/q", or "p" when the denominator is 1.
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}

  mpq_class value_;
};

/// r^e for a nonnegative exponent.
Rational pow(const Rational& r, unsigned e);

/// (-1)^n as a small integer.
constexpr int parity_sign(std::int64_t n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace eisen
