#include "eisen/arith.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>

#include "eisen/eisenstein.hpp"
#include "eisen/errors.hpp"
#include "eisen/qseries.hpp"
#include "eisen/scalars.hpp"

namespace eisen {

namespace {

void require_odd(int s) {
  if (s < 1 || s % 2 == 0) throw std::invalid_argument("divisor power must be odd and positive");
}

BigInt ipow(std::uint64_t base, int e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, static_cast<unsigned long>(e));
  return out;
}

#ifdef EISEN_FAULT_INJECTION
struct Fault {
  std::atomic<int> s{0};
  std::atomic<std::uint64_t> n{0};
  std::atomic<long> delta{0};
};
Fault g_fault;
#endif

}  // namespace

namespace testing {

#ifdef EISEN_FAULT_INJECTION
void inject_sigma_star_fault(int s, std::uint64_t n, long delta) {
  g_fault.s = s;
  g_fault.n = n;
  g_fault.delta = delta;
}
void clear_faults() { g_fault.delta = 0; }
bool fault_injection_enabled() { return true; }
#else
void inject_sigma_star_fault(int, std::uint64_t, long) {}
void clear_faults() {}
bool fault_injection_enabled() { return false; }
#endif

}  // namespace testing

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors of zero");
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Rational sigma(int s, std::uint64_t n) {
  require_odd(s);
  const int k = (s + 1) / 2;
  if (n == 0) return -bernoulli(2 * k) / Rational(4 * k);
  BigInt acc = 0;
  for (const auto d : divisors(n)) acc += ipow(d, s);
  return Rational(acc);
}

Rational sigma_star(int s, std::uint64_t n) {
  require_odd(s);
  const int k = (s + 1) / 2;
  Rational value;
  if (n == 0) {
    value = -(Rational(1) - Rational(ipow(2, 2 * k))) * bernoulli(2 * k) / Rational(4 * k);
  } else {
    BigInt acc = 0;
    for (const auto d : divisors(n)) {
      if (d % 2 == 0) {
        acc -= ipow(d, s);
      } else {
        acc += ipow(d, s);
      }
    }
    value = Rational(acc);
  }
#ifdef EISEN_FAULT_INJECTION
  if (g_fault.delta != 0 && g_fault.s == s && g_fault.n == n) value += Rational(g_fault.delta.load());
#endif
  return value;
}

Rational sigma_sharp(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("sigma_sharp needs n >= 1");
  BigInt acc = 0;
  for (const auto d : divisors(n)) {
    if (d % 2 == 1) acc += d;
  }
  return Rational(acc);
}

ArithTable tau_table(std::size_t max_n) {
  if (max_n < 1) throw std::invalid_argument("tau table needs N >= 1");
  const QSeries product = eta_product(max_n);
  const QSeries e4 = eisenstein_level1(2, max_n);
  const QSeries e6 = eisenstein_level1(3, max_n);
  const QSeries quotient = (pow(e4, 3) - pow(e6, 2)) * Rational(1, 1728);
  if (auto bad = first_mismatch(product, quotient)) {
    throw CrossCheckMismatch("tau: eta product and (E4^3 - E6^2)/1728 differ at q^" +
                                 std::to_string(bad->n),
                             bad->n);
  }
  const auto c = product.coefficients();
  return {"tau", {c.begin(), c.end()}};
}

ArithTable r_count(int s, std::size_t max_n) {
  if (s < 1) throw std::invalid_argument("r_s needs s >= 1");
  const QSeries power = pow(theta3(max_n), static_cast<unsigned>(s));
  const auto c = power.coefficients();
  return {"r" + std::to_string(s), {c.begin(), c.end()}};
}

BigInt r_oracle(int s, std::uint64_t n) {
  if (s < 1) throw std::invalid_argument("r_s needs s >= 1");
  BigInt s_factorial;
  mpz_fac_ui(s_factorial.get_mpz_t(), static_cast<unsigned long>(s));

  // Multisets of nonzero absolute values m_1 >= m_2 >= ... with sum of squares n.
  BigInt total = 0;
  std::vector<std::uint64_t> parts;
  std::function<void(std::uint64_t, std::uint64_t)> walk = [&](std::uint64_t remaining,
                                                               std::uint64_t largest) {
    if (remaining == 0) {
      const auto nonzero = parts.size();
      // Arrangements: s! / ((s - nonzero)! * prod multiplicity!) times 2^nonzero signs.
      BigInt count = s_factorial;
      BigInt f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(s - static_cast<int>(nonzero)));
      count /= f;
      for (std::size_t i = 0; i < nonzero;) {
        std::size_t j = i;
        while (j < nonzero && parts[j] == parts[i]) ++j;
        mpz_fac_ui(f.get_mpz_t(), j - i);
        count /= f;
        i = j;
      }
      count <<= static_cast<unsigned long>(nonzero);
      total += count;
      return;
    }
    if (parts.size() == static_cast<std::size_t>(s)) return;
    for (std::uint64_t m = std::min<std::uint64_t>(largest, remaining); m >= 1; --m) {
      if (m * m > remaining) continue;
      parts.push_back(m);
      walk(remaining - m * m, m);
      parts.pop_back();
    }
  };
  walk(n, n);
  return total;
}

std::uint64_t delta8_oracle(std::uint64_t n) {
  std::vector<std::uint64_t> triangular;
  for (std::uint64_t k = 0; k * (k + 1) / 2 <= n; ++k) triangular.push_back(k * (k + 1) / 2);

  std::function<std::uint64_t(int, std::uint64_t)> count = [&](int slots, std::uint64_t rest) {
    if (slots == 0) return rest == 0 ? std::uint64_t{1} : std::uint64_t{0};
    std::uint64_t total = 0;
    for (const auto t : triangular) {
      if (t > rest) break;
      total += count(slots - 1, rest - t);
    }
    return total;
  };
  return count(8, n);
}

}  // namespace eisen
