#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eisen/rational.hpp"

namespace eisen {

/// Values of one arithmetic function at n = 0..N.
///
/// Entries at n >= 1 are integers; only the n = 0 entry may carry a
/// rational boundary convention.
struct ArithTable {
  std::string kind;
  std::vector<Rational> values;

  [[nodiscard]] std::size_t max_n() const { return values.size() - 1; }
  [[nodiscard]] const Rational& operator[](std::size_t n) const { return values.at(n); }
};

/// Divisors of n >= 1 in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// sigma_s(n) = sum_{d|n} d^s for odd s = 2k-1 and n >= 1.
/// sigma_s(0) = -B_{2k} / (4k).
Rational sigma(int s, std::uint64_t n);

/// sigma*_s(n) = -sum_{d|n} (-1)^d d^s for n >= 1.
/// sigma*_s(0) = -(1 - 2^{2k}) B_{2k} / (4k).
Rational sigma_star(int s, std::uint64_t n);

/// Sum of the odd divisors of n >= 1.
Rational sigma_sharp(std::uint64_t n);

/// tau(0..N) from the eta product, cross-checked against (E4^3 - E6^2)/1728.
/// Throws CrossCheckMismatch when the two routes disagree.
ArithTable tau_table(std::size_t max_n);

/// r_s(0..N) from the s-th power of theta3.
ArithTable r_count(int s, std::size_t max_n);

/// Number of (m_1..m_s) in Z^s with sum m_i^2 = n, counted by enumerating
/// multisets of nonzero |m_i| and weighting by arrangements and signs.
BigInt r_oracle(int s, std::uint64_t n);

/// Number of ordered 8-tuples of triangular numbers summing to n, by direct
/// recursive enumeration.
std::uint64_t delta8_oracle(std::uint64_t n);

namespace testing {

/// Adds `delta` to sigma*_s(n) at one point. Compiled only into the
/// fault-injection build; a no-op stub otherwise.
void inject_sigma_star_fault(int s, std::uint64_t n, long delta);
void clear_faults();
bool fault_injection_enabled();

}  // namespace testing

}  // namespace eisen
