#include "eisen/graded.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>

#include "eisen/errors.hpp"
#include "eisen/scalars.hpp"

namespace eisen {

namespace {

constexpr std::array<int, 3> kLevel1Weights{2, 4, 6};
constexpr std::array<int, 3> kLevel2Weights{2, 4, 2};
constexpr std::array<const char*, 3> kLevel1Names{"E2", "E4", "E6"};
constexpr std::array<const char*, 3> kLevel2Names{"A", "B", "C"};

const std::array<int, 3>& generator_weights(Ring ring) {
  return ring == Ring::Level1 ? kLevel1Weights : kLevel2Weights;
}

int& exponent(Monomial& m, int index) {
  return index == 0 ? m.a : (index == 1 ? m.b : m.c);
}

int exponent(const Monomial& m, int index) {
  return index == 0 ? m.a : (index == 1 ? m.b : m.c);
}

// Derivation defined by its values on the three generators.
GradedPoly apply_derivation(const GradedPoly& f, const std::array<GradedPoly, 3>& images) {
  GradedPoly out(f.ring());
  for (const auto& [mono, coeff] : f.terms()) {
    for (int g = 0; g < 3; ++g) {
      const int e = exponent(mono, g);
      if (e == 0) continue;
      Monomial rest = mono;
      exponent(rest, g) -= 1;
      out += GradedPoly::monomial(f.ring(), rest, coeff * Rational(e)) * images[g];
    }
  }
  return out;
}

void require_weight(const GradedPoly& f, int w) {
  if (!f.is_homogeneous_of(w)) throw NotHomogeneous(w);
}

int inferred_weight(const GradedPoly& f) {
  if (f.is_zero()) return 0;
  const auto w = f.weight();
  if (!w) throw NotHomogeneous(-1);
  return *w;
}

// Solves a square system with rational entries: rows are scaled to integers,
// then Bareiss elimination with first-nonzero pivoting, then back substitution.
std::vector<Rational> solve_exact(const std::vector<std::vector<Rational>>& matrix,
                                  const std::vector<Rational>& rhs) {
  const std::size_t n = matrix.size();
  std::vector<std::vector<BigInt>> aug(n, std::vector<BigInt>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    BigInt den = 1;
    for (std::size_t c = 0; c < n; ++c) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), matrix[r][c].raw().get_den_mpz_t());
    }
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), rhs[r].raw().get_den_mpz_t());
    for (std::size_t c = 0; c <= n; ++c) {
      const Rational& v = c < n ? matrix[r][c] : rhs[r];
      aug[r][c] = v.raw().get_num() * (den / v.raw().get_den());
    }
  }

  BigInt previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && aug[pivot][k] == 0) ++pivot;
    if (pivot == n) throw SingularSystem();
    std::swap(aug[k], aug[pivot]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        BigInt v = aug[k][k] * aug[i][j] - aug[i][k] * aug[k][j];
        mpz_divexact(aug[i][j].get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      }
      aug[i][k] = 0;
    }
    previous = aug[k][k];
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc(aug[i][n]);
    for (std::size_t j = i + 1; j < n; ++j) acc -= Rational(aug[i][j]) * x[j];
    x[i] = acc / Rational(aug[i][i]);
  }
  return x;
}

}  // namespace

int weight(Ring ring, const Monomial& m) {
  const auto& w = generator_weights(ring);
  return w[0] * m.a + w[1] * m.b + w[2] * m.c;
}

GradedPoly::GradedPoly(Ring ring, const Rational& c) : ring_(ring) { add_term({}, c); }

GradedPoly GradedPoly::monomial(Ring ring, Monomial m, const Rational& c) {
  GradedPoly out(ring);
  out.add_term(m, c);
  return out;
}

GradedPoly GradedPoly::generator(Ring ring, int index) {
  if (index < 0 || index > 2) throw std::out_of_range("generator index must be 0, 1 or 2");
  Monomial m;
  exponent(m, index) = 1;
  return monomial(ring, m);
}

Rational GradedPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<int> GradedPoly::weight() const {
  std::optional<int> w;
  for (const auto& [mono, coeff] : terms_) {
    const int mw = eisen::weight(ring_, mono);
    if (w && *w != mw) return std::nullopt;
    w = mw;
  }
  return w;
}

bool GradedPoly::is_homogeneous_of(int w) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return eisen::weight(ring_, t.first) == w; });
}

void GradedPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& rhs) {
  if (ring_ != rhs.ring_) throw RingMismatch();
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& rhs) {
  if (ring_ != rhs.ring_) throw RingMismatch();
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  if (a.ring_ != b.ring_) throw RingMismatch();
  GradedPoly out(a.ring_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term({ma.a + mb.a, ma.b + mb.b, ma.c + mb.c}, ca * cb);
    }
  }
  return out;
}

std::string GradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  const auto& names = ring_ == Ring::Level1 ? kLevel1Names : kLevel2Names;
  std::string out;
  // Highest B-power first, matching the basis order of decompositions.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string factors;
    for (int g = 0; g < 3; ++g) {
      const int e = exponent(m, g);
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += names[g];
      if (e > 1) factors += "^" + std::to_string(e);
    }
    Rational shown = c;
    if (!out.empty()) {
      out += c.sign() < 0 ? " - " : " + ";
      if (c.sign() < 0) shown = -c;
    }
    if (factors.empty()) {
      out += shown.to_string();
    } else if (shown == Rational(1)) {
      out += factors;
    } else if (shown == Rational(-1)) {
      out += "-" + factors;
    } else {
      out += shown.to_string() + "*" + factors;
    }
  }
  return out;
}

GradedPoly pow(const GradedPoly& f, unsigned e) {
  GradedPoly out(f.ring(), Rational(1));
  for (unsigned i = 0; i < e; ++i) out = out * f;
  return out;
}

GradedPoly level2::D() { return (C() * C() - B()) * Rational(1, 64); }

GradedPoly serre_delta(const GradedPoly& f, int w) {
  if (f.ring() != Ring::Level2) throw RingMismatch();
  require_weight(f, w);
  using namespace level2;
  static const std::array<GradedPoly, 3> images{
      (A() * A() + B()) * Rational(-1, 4),
      -(B() * C()),
      B() * Rational(-1, 2),
  };
  return apply_derivation(f, images);
}

GradedPoly serre_delta(const GradedPoly& f) { return serre_delta(f, inferred_weight(f)); }

GradedPoly serre_partial(const GradedPoly& f, int w) {
  if (f.ring() != Ring::Level1) throw RingMismatch();
  require_weight(f, w);
  using namespace level1;
  static const std::array<GradedPoly, 3> images{
      (E2() * E2() + E4()) * Rational(-1, 12),
      E6() * Rational(-1, 3),
      E4() * E4() * Rational(-1, 2),
  };
  return apply_derivation(f, images);
}

GradedPoly serre_partial(const GradedPoly& f) { return serre_partial(f, inferred_weight(f)); }

QSeries evaluate(const GradedPoly& f, const SeriesCatalog& catalog, std::size_t order) {
  const bool l1 = f.ring() == Ring::Level1;
  const std::array<QSeries, 3> gens = l1 ? std::array<QSeries, 3>{catalog.E(2, order),
                                                                  catalog.E(4, order),
                                                                  catalog.E(6, order)}
                                         : std::array<QSeries, 3>{catalog.A(order),
                                                                  catalog.B(order),
                                                                  catalog.C(order)};
  std::array<std::vector<QSeries>, 3> powers;
  auto power = [&](int g, int e) -> const QSeries& {
    auto& p = powers[g];
    if (p.empty()) p.push_back(QSeries::one(order));
    while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * gens[g]);
    return p[e];
  };

  QSeries out = QSeries::zero(order);
  for (const auto& [m, c] : f.terms()) {
    QSeries term = power(0, m.a);
    if (m.b > 0) term = term * power(1, m.b);
    if (m.c > 0) term = term * power(2, m.c);
    out += term * c;
  }
  return out;
}

std::vector<TermRecord> serialize(const GradedPoly& f) {
  std::vector<TermRecord> out;
  for (const auto& [m, c] : f.terms()) out.push_back({m.a, m.b, m.c, c.to_string()});
  return out;
}

int modular_dimension(int weight) {
  if (weight < 2 || weight % 2 != 0) throw std::invalid_argument("weight must be even and >= 2");
  return weight / 4 + 1;
}

std::vector<Monomial> BasisDecomposition::basis() const {
  const int k = weight / 2;
  std::vector<Monomial> out;
  for (int j = k / 2; j >= 0; --j) out.push_back({0, j, k - 2 * j});
  return out;
}

GradedPoly BasisDecomposition::to_poly() const {
  GradedPoly out(Ring::Level2);
  const auto monos = basis();
  for (std::size_t i = 0; i < monos.size(); ++i) {
    out += GradedPoly::monomial(Ring::Level2, monos[i], coefficients.at(i));
  }
  return out;
}

BasisDecomposition decompose_modular(const QSeries& s, int weight, const SeriesCatalog& catalog) {
  const int dim = modular_dimension(weight);
  if (s.order() < static_cast<std::size_t>(2 * dim)) {
    throw std::invalid_argument("series order must be at least twice the dimension");
  }
  const std::size_t order = s.order();
  BasisDecomposition out{weight, {}};

  std::vector<QSeries> basis;
  for (const auto& m : out.basis()) {
    basis.push_back(evaluate(GradedPoly::monomial(Ring::Level2, m), catalog, order));
  }

  std::vector<std::vector<Rational>> matrix(dim, std::vector<Rational>(dim));
  std::vector<Rational> rhs(dim);
  for (int n = 0; n < dim; ++n) {
    for (int i = 0; i < dim; ++i) matrix[n][i] = basis[i][n];
    rhs[n] = s[n];
  }
  out.coefficients = solve_exact(matrix, rhs);

  QSeries fit = QSeries::zero(order);
  for (int i = 0; i < dim; ++i) fit += basis[i] * out.coefficients[i];
  if (auto bad = first_mismatch(fit, s)) throw ResidualMismatch(bad->n);
  return out;
}

BasisDecomposition decompose_modular(const GradedPoly& f, const SeriesCatalog& catalog,
                                     std::size_t order) {
  if (f.ring() != Ring::Level2) throw QuasiModularInput();
  for (const auto& [m, c] : f.terms()) {
    if (m.a != 0) throw QuasiModularInput();
  }
  const auto w = f.weight();
  if (!w) throw NotHomogeneous(-1);
  return decompose_modular(evaluate(f, catalog, order), *w, catalog);
}

namespace {

struct EStarCache {
  std::mutex mutex;
  std::vector<GradedPoly> polys;  // index m - 2
};

EStarCache& estar_cache() {
  static EStarCache cache;
  return cache;
}

GradedPoly next_e_star(const std::vector<GradedPoly>& known, int m) {
  // known[i] holds E*_{2(i+2)}; m >= 3.
  const PiScaled denom = kPiSquared * lambda_even(m - 1);
  const Rational alpha =
      Rational(2 * m - 2) * Rational(2 * m - 1, 2) * ratio(lambda_even(m), denom);
  if (alpha.sign() <= 0) {
    throw std::runtime_error("alpha_" + std::to_string(2 * m) + " is not positive");
  }
  GradedPoly sum(Ring::Level2);
  for (int k = 2; k <= m - 2; ++k) {
    const Rational c = Rational(2 * m - 2) * ratio(lambda_even(k) * lambda_even(m - k), denom);
    sum += known[k - 2] * known[m - k - 2] * c;
  }
  return (sum - serre_delta(known[m - 3], 2 * m - 2)) * (Rational(1) / alpha);
}

}  // namespace

GradedPoly e_star_poly(int m, const SeriesCatalog& catalog, std::size_t order) {
  if (m < 2) throw std::invalid_argument("e_star_poly needs m >= 2");
  auto& cache = estar_cache();
  std::lock_guard lock(cache.mutex);
  if (cache.polys.empty()) cache.polys.push_back(level2::B());
  while (static_cast<int>(cache.polys.size()) < m - 1) {
    const int next = static_cast<int>(cache.polys.size()) + 2;
    GradedPoly poly = next_e_star(cache.polys, next);

    const std::size_t need = 2 * static_cast<std::size_t>(modular_dimension(2 * next));
    const std::size_t n = std::max(order, need);
    const BasisDecomposition fitted = decompose_modular(catalog.Estar(2 * next, n), 2 * next, catalog);
    if (fitted.to_poly() != poly) {
      throw CrossCheckMismatch("E*" + std::to_string(2 * next) +
                                   ": recursion gives " + poly.to_string() +
                                   ", series decomposition gives " + fitted.to_poly().to_string(),
                               static_cast<std::size_t>(next));
    }
    cache.polys.push_back(std::move(poly));
  }
  return cache.polys[m - 2];
}

GradedPoly e_star_poly(int m) {
  static const SeriesCatalog catalog;
  return e_star_poly(m, catalog);
}

bool check_positivity(int m, const SeriesCatalog& catalog, std::size_t order) {
  const GradedPoly poly = e_star_poly(m, catalog, order);
  if (poly.is_zero()) return false;
  return std::all_of(poly.terms().begin(), poly.terms().end(), [&](const auto& t) {
    const auto& [mono, c] = t;
    return c.sign() > 0 && mono.a == 0 && mono.b >= 1 && weight(Ring::Level2, mono) == 2 * m;
  });
}

bool check_positivity(int m) {
  static const SeriesCatalog catalog;
  return check_positivity(m, catalog);
}

}  // namespace eisen
