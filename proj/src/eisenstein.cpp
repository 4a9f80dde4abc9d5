#include "eisen/eisenstein.hpp"

#include <regex>
#include <stdexcept>

#include "eisen/arith.hpp"
#include "eisen/errors.hpp"
#include "eisen/scalars.hpp"

namespace eisen {

namespace {

void cross_check(const QSeries& lhs, const QSeries& rhs, const std::string& what) {
  if (auto bad = first_mismatch(lhs, rhs)) {
    throw CrossCheckMismatch(what + " differ at q^" + std::to_string(bad->n) + ": " +
                                 bad->lhs.to_string() + " vs " + bad->rhs.to_string(),
                             bad->n);
  }
}

// "E<2k>" or "E<2k>star" with even weight; returns -1 when the name does not match.
int parse_weight(const std::string& name, bool star) {
  static const std::regex level1(R"(E(\d+))");
  static const std::regex level2(R"(E(\d+)star)");
  std::smatch m;
  if (!std::regex_match(name, m, star ? level2 : level1)) return -1;
  if (m[1].length() > 3) return -1;
  const int w = std::stoi(m[1]);
  if (w % 2 != 0) return -1;
  return w;
}

}  // namespace

Rational level1_constant(int k) {
  if (k < 1) throw std::invalid_argument("level-1 Eisenstein series needs k >= 1");
  return -Rational(4 * k) / bernoulli(2 * k);
}

Rational level2_constant(int k) {
  if (k < 1) throw std::invalid_argument("level-2 constant needs k >= 1");
  BigInt four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 2, static_cast<unsigned long>(2 * k));
  return -(Rational(1) / (Rational(1) - Rational(four_k))) * Rational(4 * k) / bernoulli(2 * k);
}

QSeries eisenstein_level1(int k, std::size_t order) {
  const Rational c = level1_constant(k);
  std::vector<Rational> v(order + 1);
  v[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) v[n] = c * sigma(2 * k - 1, n);
  return QSeries(std::move(v));
}

QSeries eisenstein_level2(int k, std::size_t order) {
  if (k < 0) throw std::invalid_argument("level-2 Eisenstein series needs k >= 0");
  if (k == 0) return QSeries::one(order);
  const Rational c = level2_constant(k);
  std::vector<Rational> v(order + 1);
  v[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) v[n] = c * sigma_star(2 * k - 1, n);
  return QSeries(std::move(v));
}

QSeries eta_product(std::size_t order) {
  // Coefficients of prod (1 - q^n)^24 up to q^{order-1}, then shift by q.
  std::vector<BigInt> c(order, 0);
  if (order > 0) c[0] = 1;
  for (std::size_t n = 1; n < order; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (std::size_t i = order - 1; i >= n; --i) c[i] -= c[i - n];
    }
  }
  std::vector<Rational> v(order + 1);
  for (std::size_t i = 0; i < order; ++i) v[i + 1] = Rational(c[i]);
  return QSeries(std::move(v));
}

QSeries discriminant(std::size_t order) {
  if (order < 1) throw std::invalid_argument("discriminant needs order >= 1");
  const QSeries product = eta_product(order);

  const QSeries e4 = eisenstein_level1(2, order);
  const QSeries e6 = eisenstein_level1(3, order);
  cross_check(product, (pow(e4, 3) - pow(e6, 2)) * Rational(1, 1728),
              "eta product and (E4^3 - E6^2)/1728");

  const QSeries b = eisenstein_level2(2, order);
  const QSeries e6s = eisenstein_level2(3, order);
  cross_check(product, (pow(b, 3) - pow(e6s, 2)) * Rational(-1, 64),
              "eta product and -(E*4^3 - E*6^2)/64");
  return product;
}

QSeries theta3(std::size_t order) {
  std::vector<Rational> v(order + 1);
  v[0] = 1;
  for (std::size_t m = 1; m * m <= order; ++m) v[m * m] = 2;
  return QSeries(std::move(v));
}

QSeries series_C(std::size_t order) {
  if (order < 1) throw std::invalid_argument("series C needs order >= 1");
  const QSeries quotient = eisenstein_level2(3, order) / eisenstein_level2(2, order);
  std::vector<Rational> v(order + 1);
  v[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) v[n] = Rational(24) * sigma_sharp(n);
  cross_check(quotient, QSeries(std::move(v)), "E*6/E*4 and 1 + 24 sum sigma#(n) q^n");
  return quotient;
}

QSeries series_D(std::size_t order) {
  if (order < 1) throw std::invalid_argument("series D needs order >= 1");
  const QSeries c = series_C(order);
  const QSeries d = (eisenstein_level2(2, order) - c * c) * Rational(-1, 64);
  if (!d[0].is_zero()) throw CrossCheckMismatch("D has a nonzero constant term", 0);
  const std::size_t limit = std::min<std::size_t>(order - 1, 50);
  for (std::size_t n = 0; n <= limit; ++n) {
    const Rational expected(static_cast<long long>(delta8_oracle(n)));
    if (d[n + 1] != expected) {
      throw CrossCheckMismatch("D and the triangular-number count differ at q^" +
                                   std::to_string(n + 1),
                               n + 1);
    }
  }
  return d;
}

bool SeriesCatalog::known(const std::string& name) {
  if (name == "Delta" || name == "theta3" || name == "A" || name == "B" || name == "C" ||
      name == "D") {
    return true;
  }
  return parse_weight(name, false) >= 0 || parse_weight(name, true) >= 0;
}

QSeries SeriesCatalog::build(const std::string& name, std::size_t order) {
  if (name == "Delta") return discriminant(order);
  if (name == "theta3") return eisen::theta3(order);
  if (name == "A") return eisenstein_level2(1, order);
  if (name == "B") return eisenstein_level2(2, order);
  if (name == "C") return series_C(order);
  if (name == "D") return series_D(order);
  if (const int w = parse_weight(name, true); w >= 0) return eisenstein_level2(w / 2, order);
  if (const int w = parse_weight(name, false); w >= 0) {
    return w == 0 ? QSeries::one(order) : eisenstein_level1(w / 2, order);
  }
  throw UnknownName(name);
}

QSeries SeriesCatalog::get(const std::string& name, std::size_t order) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = memo_.find(name); it != memo_.end() && it->second.order() >= order) {
      return it->second.truncated(order);
    }
  }
  // Built outside the lock; concurrent builders of the same entry agree exactly.
  QSeries fresh = build(name, order);
  std::lock_guard lock(mutex_);
  auto it = memo_.find(name);
  if (it == memo_.end()) {
    memo_.emplace(name, fresh);
  } else if (it->second.order() < order) {
    it->second = fresh;
  }
  return fresh;
}

}  // namespace eisen
