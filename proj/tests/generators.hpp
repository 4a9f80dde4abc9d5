#pragma once

// Seeded random inputs for the property suites. Small orders and
// coefficients keep each case cheap; the fixed seed keeps failures
// reproducible.

#include <random>

#include "eisen/graded.hpp"
#include "eisen/qseries.hpp"

namespace eisen::gen {

inline constexpr int kCases = 120;

class Source {
 public:
  explicit Source(unsigned seed = 20231) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational() {
    const int den = integer(1, 9);
    return Rational(integer(-9, 9), den);
  }

  QSeries series(std::size_t order) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i <= order; ++i) c.push_back(rational());
    return QSeries(std::move(c));
  }

  /// Series with a nonzero constant term.
  QSeries unit_series(std::size_t order) {
    std::vector<Rational> c{Rational(integer(1, 9) * (integer(0, 1) ? 1 : -1))};
    for (std::size_t i = 1; i <= order; ++i) c.push_back(rational());
    return QSeries(std::move(c));
  }

  std::size_t order() { return static_cast<std::size_t>(integer(0, 16)); }

  /// Homogeneous polynomial of weight w (w even, >= 2) with up to `terms` monomials.
  GradedPoly homogeneous(Ring ring, int w, int terms = 3) {
    std::vector<Monomial> monos;
    // weights per ring: level 1 (2,4,6), level 2 (2,4,2)
    const int wa = 2;
    const int wb = 4;
    const int wc = ring == Ring::Level1 ? 6 : 2;
    for (int a = 0; a * wa <= w; ++a) {
      for (int b = 0; a * wa + b * wb <= w; ++b) {
        const int rest = w - a * wa - b * wb;
        if (rest % wc == 0) monos.push_back({a, b, rest / wc});
      }
    }
    GradedPoly f(ring);
    for (int t = 0; t < terms; ++t) {
      const auto& m = monos[static_cast<std::size_t>(integer(0, static_cast<int>(monos.size()) - 1))];
      f += GradedPoly::monomial(ring, m, rational());
    }
    return f;
  }

  /// Modular (A-free) level-2 polynomial of weight w.
  GradedPoly modular(int w, int terms = 3) {
    GradedPoly f(Ring::Level2);
    for (int t = 0; t < terms; ++t) {
      const int k = w / 2;
      const int j = integer(0, k / 2);
      f += GradedPoly::monomial(Ring::Level2, {0, j, k - 2 * j}, rational());
    }
    return f;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace eisen::gen
