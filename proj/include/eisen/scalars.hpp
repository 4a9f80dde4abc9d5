#pragma once

#include <vector>

#include "eisen/rational.hpp"

namespace eisen {

/// coeff * pi^pi_power, pi_power even and nonnegative.
struct PiScaled {
  Rational coeff;
  int pi_power = 0;

  friend PiScaled operator*(const PiScaled& a, const PiScaled& b) {
    return {a.coeff * b.coeff, a.pi_power + b.pi_power};
  }
  friend PiScaled operator+(const PiScaled& a, const PiScaled& b);
  friend bool operator==(const PiScaled& a, const PiScaled& b) = default;
};

PiScaled scale(const Rational& r, const PiScaled& x);

/// Ratio of two values with equal pi powers. Throws std::invalid_argument
/// when the powers differ and DivisionByZero when the divisor vanishes.
Rational ratio(const PiScaled& num, const PiScaled& den);

inline const PiScaled kPiSquared{Rational(1), 2};

/// Bernoulli number B_n for x/(e^x - 1), so B_1 = -1/2.
Rational bernoulli(int n);

/// B_0 .. B_n.
std::vector<Rational> bernoulli_table(int n);

/// zeta(2k) = -(1/2) (2 pi i)^{2k} / (2k)! * B_{2k}, exact.
PiScaled zeta_even(int k);

/// lambda(2k) = (1 - 2^{-2k}) zeta(2k).
PiScaled lambda_even(int k);

enum class ZetaKind { Zeta, Lambda };

/// Checks the quadratic recursion at m >= 2:
///   zeta:   zeta(2m)   = 2/(2m+1) * sum_{k=1}^{m-1} zeta(2k) zeta(2m-2k)
///   lambda: lambda(2m) = 2/(2m-1) * sum_{k=1}^{m-1} lambda(2k) lambda(2m-2k)
bool check_scalar_recursion(ZetaKind kind, int m);

}  // namespace eisen
