#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eisen/eisenstein.hpp"
#include "eisen/qseries.hpp"
#include "eisen/rational.hpp"

namespace eisen {

/// Level 1: generators (E2, E4, E6) of weights (2, 4, 6).
/// Level 2: generators (A, B, C) of weights (2, 4, 2), A = E*2, B = E*4, C = E*6/E*4.
enum class Ring { Level1, Level2 };

/// Exponents of the three generators, in the order listed for the ring.
struct Monomial {
  int a = 0;
  int b = 0;
  int c = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

int weight(Ring ring, const Monomial& m);

class GradedPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit GradedPoly(Ring ring) : ring_(ring) {}
  GradedPoly(Ring ring, const Rational& c);

  static GradedPoly monomial(Ring ring, Monomial m, const Rational& c = Rational(1));
  /// The generator with the given position 0, 1 or 2.
  static GradedPoly generator(Ring ring, int index);

  [[nodiscard]] Ring ring() const { return ring_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(const Monomial& m) const;

  /// Common weight of all monomials; nullopt for the zero polynomial or
  /// mixed weights.
  [[nodiscard]] std::optional<int> weight() const;
  /// True for the zero polynomial.
  [[nodiscard]] bool is_homogeneous_of(int w) const;

  GradedPoly& operator+=(const GradedPoly& rhs);
  GradedPoly& operator-=(const GradedPoly& rhs);
  GradedPoly& operator*=(const Rational& s);

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(GradedPoly a, const Rational& s) { return a *= s; }
  friend GradedPoly operator*(const Rational& s, GradedPoly a) { return a *= s; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  GradedPoly operator-() const { return *this * Rational(-1); }

  friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

  /// e.g. "9/17*B^2 + 8/17*B*C^2".
  [[nodiscard]] std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  Ring ring_;
  Terms terms_;
};

GradedPoly pow(const GradedPoly& f, unsigned e);

namespace level2 {
inline GradedPoly A() { return GradedPoly::generator(Ring::Level2, 0); }
inline GradedPoly B() { return GradedPoly::generator(Ring::Level2, 1); }
inline GradedPoly C() { return GradedPoly::generator(Ring::Level2, 2); }
/// D = -(B - C^2)/64.
GradedPoly D();
}  // namespace level2

namespace level1 {
inline GradedPoly E2() { return GradedPoly::generator(Ring::Level1, 0); }
inline GradedPoly E4() { return GradedPoly::generator(Ring::Level1, 1); }
inline GradedPoly E6() { return GradedPoly::generator(Ring::Level1, 2); }
}  // namespace level1

/// Serre derivative q f' - (w/4) A f on level 2, from
/// dA = -(A^2 + B)/4, dB = -BC, dC = -B/2 and the Leibniz rule.
/// Throws NotHomogeneous unless f is homogeneous of weight w.
GradedPoly serre_delta(const GradedPoly& f, int w);
GradedPoly serre_delta(const GradedPoly& f);

/// Serre derivative q f' - (w/12) E2 f on level 1, from
/// dE2 = -(E2^2 + E4)/12, dE4 = -E6/3, dE6 = -E4^2/2.
GradedPoly serre_partial(const GradedPoly& f, int w);
GradedPoly serre_partial(const GradedPoly& f);

/// Substitutes the generator q-expansions from the catalog.
QSeries evaluate(const GradedPoly& f, const SeriesCatalog& catalog, std::size_t order);

/// Sorted (a, b, c, "p/q") records.
struct TermRecord {
  int a;
  int b;
  int c;
  std::string coeff;
};
std::vector<TermRecord> serialize(const GradedPoly& f);

/// Coordinates of a weight-2k form in the basis B^j C^{k-2j}, j descending
/// from floor(k/2) to 0.
struct BasisDecomposition {
  int weight = 0;
  std::vector<Rational> coefficients;

  [[nodiscard]] std::vector<Monomial> basis() const;
  [[nodiscard]] GradedPoly to_poly() const;
};

/// dim M_{2k} = floor(2k/4) + 1.
int modular_dimension(int weight);

/// Fits the basis on the first dim coefficients by fraction-free elimination,
/// then verifies every remaining coefficient. Throws ResidualMismatch(n) when
/// s is not in M_{2k} and SingularSystem if the basis matrix degenerates.
BasisDecomposition decompose_modular(const QSeries& s, int weight, const SeriesCatalog& catalog);

/// Same, for a polynomial; throws QuasiModularInput for level-1 input or any
/// monomial containing A.
BasisDecomposition decompose_modular(const GradedPoly& f, const SeriesCatalog& catalog,
                                     std::size_t order);

/// E*_{2m} as a polynomial in B and C from the level-2 differential
/// equations, each step cross-checked against the decomposition of the
/// q-series at `order`. Throws CrossCheckMismatch on disagreement.
GradedPoly e_star_poly(int m, const SeriesCatalog& catalog, std::size_t order = 64);
GradedPoly e_star_poly(int m);

/// True iff E*_{2m} = B f with f homogeneous of weight 2m - 4 and every
/// coefficient of E*_{2m} strictly positive.
bool check_positivity(int m, const SeriesCatalog& catalog, std::size_t order = 64);
bool check_positivity(int m);

}  // namespace eisen
