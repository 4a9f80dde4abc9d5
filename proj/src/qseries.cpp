#include "eisen/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "eisen/errors.hpp"

namespace eisen {

namespace {

// Series written as nums / den with integer numerators over one common denominator.
struct ScaledSeries {
  std::vector<BigInt> nums;
  BigInt den = 1;
};

ScaledSeries to_integers(std::span<const Rational> c, std::size_t order) {
  ScaledSeries out;
  for (std::size_t i = 0; i <= order; ++i) {
    mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), c[i].raw().get_den_mpz_t());
  }
  out.nums.resize(order + 1);
  BigInt factor;
  for (std::size_t i = 0; i <= order; ++i) {
    mpz_divexact(factor.get_mpz_t(), out.den.get_mpz_t(), c[i].raw().get_den_mpz_t());
    out.nums[i] = c[i].raw().get_num() * factor;
  }
  return out;
}

}  // namespace

QSeries::QSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("a series needs at least one coefficient");
}

QSeries QSeries::constant(const Rational& c, std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = c;
  return QSeries(std::move(v));
}

QSeries QSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw std::invalid_argument("cannot extend a series beyond its computed order");
  }
  return QSeries({coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order) + 1});
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_zero(); });
}

QSeries& QSeries::operator+=(const QSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

QSeries QSeries::operator-() const {
  QSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  const ScaledSeries x = to_integers(a.coefficients(), order);
  const ScaledSeries y = to_integers(b.coefficients(), order);

  std::vector<std::size_t> support;
  for (std::size_t j = 0; j <= order; ++j) {
    if (x.nums[j] != 0) support.push_back(j);
  }

  std::vector<BigInt> acc(order + 1);
  for (const std::size_t j : support) {
    for (std::size_t k = 0; j + k <= order; ++k) {
      mpz_addmul(acc[j + k].get_mpz_t(), x.nums[j].get_mpz_t(), y.nums[k].get_mpz_t());
    }
  }

  const BigInt den = x.den * y.den;
  std::vector<Rational> out;
  out.reserve(order + 1);
  for (const auto& v : acc) out.emplace_back(v, den);
  return QSeries(std::move(out));
}

QSeries operator/(const QSeries& a, const QSeries& b) { return a * invert(b); }

QSeries theta(const QSeries& a) {
  std::vector<Rational> out(a.coefficients().begin(), a.coefficients().end());
  for (std::size_t n = 0; n < out.size(); ++n) out[n] *= Rational(static_cast<long>(n));
  return QSeries(std::move(out));
}

QSeries invert(const QSeries& a) {
  if (a[0].is_zero()) throw ZeroConstantTerm();
  const Rational inv0 = Rational(1) / a[0];
  std::vector<Rational> b(a.order() + 1);
  b[0] = inv0;
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Rational acc;
    for (std::size_t j = 1; j <= n; ++j) {
      if (!a[j].is_zero()) acc += a[j] * b[n - j];
    }
    b[n] = -inv0 * acc;
  }
  return QSeries(std::move(b));
}

QSeries negate_q(const QSeries& a) {
  std::vector<Rational> out(a.coefficients().begin(), a.coefficients().end());
  for (std::size_t n = 1; n < out.size(); n += 2) out[n] = -out[n];
  return QSeries(std::move(out));
}

QSeries pow(const QSeries& a, unsigned e) {
  QSeries result = QSeries::one(a.order());
  QSeries base = a;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

QSeries determinant(const std::vector<std::vector<QSeries>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant needs a square matrix");
  }
  if (n == 1) return m[0][0];

  std::size_t order = m[0][0].order();
  for (const auto& row : m) {
    for (const auto& e : row) order = std::min(order, e.order());
  }

  QSeries det = QSeries::zero(order);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<QSeries>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<QSeries> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    const QSeries term = m[0][col] * determinant(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

std::optional<Discrepancy> first_mismatch(const QSeries& lhs, const QSeries& rhs) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  for (std::size_t n = 0; n <= order; ++n) {
    if (lhs[n] != rhs[n]) return Discrepancy{n, lhs[n], rhs[n]};
  }
  return std::nullopt;
}

std::vector<std::string> to_strings(const QSeries& a) {
  std::vector<std::string> out;
  out.reserve(a.order() + 1);
  for (const auto& c : a.coefficients()) out.push_back(c.to_string());
  return out;
}

}  // namespace eisen
