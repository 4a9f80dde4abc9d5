#include "eisen/rational.hpp"

#include <stdexcept>

#include "eisen/errors.hpp"

namespace eisen {

namespace {

BigInt from_ll(long long n) {
  // mpz_class has no long long constructor on LP64 toolchains without this cast.
  return BigInt(std::to_string(n));
}

}  // namespace

Rational::Rational(long long n) : value_(from_ll(n)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(long long num, long long den) : Rational(from_ll(num), from_ll(den)) {}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  BigInt num;
  BigInt den = 1;
  try {
    if (slash == std::string::npos) {
      if (s.empty() || num.set_str(s, 10) != 0) throw std::invalid_argument("bad integer");
    } else {
      const std::string n = s.substr(0, slash);
      const std::string d = s.substr(slash + 1);
      if (n.empty() || d.empty() || num.set_str(n, 10) != 0 || den.set_str(d, 10) != 0) {
        throw std::invalid_argument("bad fraction");
      }
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse rational: " + s);
  }
  return {num, den};
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational pow(const Rational& r, unsigned e) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), r.raw().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), r.raw().get_den_mpz_t(), e);
  return {num, den};
}

}  // namespace eisen
