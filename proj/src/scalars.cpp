#include "eisen/scalars.hpp"

#include <mutex>
#include <stdexcept>

namespace eisen {

namespace {

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt power_of_two(unsigned e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

}  // namespace

PiScaled operator+(const PiScaled& a, const PiScaled& b) {
  if (a.coeff.is_zero()) return b;
  if (b.coeff.is_zero()) return a;
  if (a.pi_power != b.pi_power) {
    throw std::invalid_argument("cannot add values with different powers of pi");
  }
  return {a.coeff + b.coeff, a.pi_power};
}

PiScaled scale(const Rational& r, const PiScaled& x) { return {r * x.coeff, x.pi_power}; }

Rational ratio(const PiScaled& num, const PiScaled& den) {
  if (num.pi_power != den.pi_power && !num.coeff.is_zero()) {
    throw std::invalid_argument("ratio of values with different powers of pi is not rational");
  }
  return num.coeff / den.coeff;
}

std::vector<Rational> bernoulli_table(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli index must be nonnegative");

  // Grows on demand; entries never change once computed.
  static std::mutex mutex;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mutex);
  for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
    // sum_{j=0}^{m} C(m+1, j) B_j = 0, solved for B_m.
    Rational acc;
    for (int j = 0; j < m; ++j) {
      acc += Rational(binomial(m + 1, j)) * cache[j];
    }
    cache.push_back(-acc / Rational(binomial(m + 1, m)));
  }
  return {cache.begin(), cache.begin() + n + 1};
}

Rational bernoulli(int n) { return bernoulli_table(n).back(); }

PiScaled zeta_even(int k) {
  if (k < 0) throw std::invalid_argument("zeta_even needs k >= 0");
  // (2 pi i)^{2k} = (-1)^k 2^{2k} pi^{2k}
  const Rational c = Rational(power_of_two(2 * k) * parity_sign(k), factorial(2 * k)) *
                     bernoulli(2 * k) * Rational(-1, 2);
  return {c, 2 * k};
}

PiScaled lambda_even(int k) {
  const PiScaled z = zeta_even(k);
  const Rational factor = Rational(1) - Rational(BigInt(1), power_of_two(2 * k));
  return {factor * z.coeff, z.pi_power};
}

bool check_scalar_recursion(ZetaKind kind, int m) {
  if (m < 2) throw std::invalid_argument("recursion holds for m >= 2");
  auto value = [kind](int k) { return kind == ZetaKind::Zeta ? zeta_even(k) : lambda_even(k); };

  PiScaled sum{Rational(0), 2 * m};
  for (int k = 1; k <= m - 1; ++k) sum = sum + value(k) * value(m - k);
  const Rational factor =
      kind == ZetaKind::Zeta ? Rational(2, 2 * m + 1) : Rational(2, 2 * m - 1);
  return scale(factor, sum) == value(m);
}

}  // namespace eisen
