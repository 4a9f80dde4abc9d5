// Checks on the graded polynomial side: Serre derivatives, decompositions
// in the B, C basis, positivity.

#include <algorithm>

#include "checks.hpp"
#include "eisen/graded.hpp"

namespace eisen::checks {

namespace {

using namespace level2;

// Polynomial equality reported as a weight-indexed mismatch.
void same_poly(Outcome& out, const GradedPoly& lhs, const GradedPoly& rhs, const std::string& what) {
  if (lhs == rhs) return;
  const auto w = static_cast<std::size_t>(std::max(lhs.weight().value_or(0), rhs.weight().value_or(0)));
  out.note(what + ": " + lhs.to_string() + " vs " + rhs.to_string());
  out.require(false, w, Rational(0), Rational(1), what);
}

// Enough terms for the decomposition cross-check at weight 2m.
std::size_t order_for(int m, std::size_t requested) {
  return std::max<std::size_t>(requested, static_cast<std::size_t>(2 * modular_dimension(2 * m) + 8));
}

CheckReport serre_system(const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("P4", n);
  same_poly(out, serre_delta(A(), 2), Rational(-1, 4) * (A() * A() + B()), "delta A = -(A^2 + B)/4");
  same_poly(out, serre_delta(B(), 4), -(B() * C()), "delta B = -BC");
  same_poly(out, serre_delta(C(), 2), Rational(-1, 2) * B(), "delta C = -B/2");

  const QSeries a = cat.A(n);
  const QSeries b = cat.B(n);
  const QSeries c = cat.C(n);
  out.series(theta(a) - a * a * Rational(1, 2), (a * a + b) * Rational(-1, 4), "qA' - A^2/2 = -(A^2 + B)/4");
  out.series(theta(b) - a * b, -(b * c), "qB' - AB = -BC");
  out.series(theta(c) - a * c * Rational(1, 2), b * Rational(-1, 2), "qC' - AC/2 = -B/2");

  // delta maps C[A,B,C]_{2k} to weight 2k + 2, and agrees with the series operator.
  const std::vector<GradedPoly> samples{A() * B(),        A() * A() * C(),  B() * C() * C(),
                                        pow(C(), 3),      A() * B() * C(),  B() * B() + A() * pow(C(), 3)};
  for (const auto& f : samples) {
    const int w = *f.weight();
    const GradedPoly df = serre_delta(f, w);
    out.require(df.is_homogeneous_of(w + 2), static_cast<std::size_t>(w), Rational(w + 2),
                Rational(df.weight().value_or(-1)), "delta raises weight by 2");
    const QSeries fs = evaluate(f, cat, n);
    out.series(evaluate(df, cat, n), theta(fs) - a * fs * Rational(w, 4),
               "delta(" + f.to_string() + ") on series");
  }
  return out.finish();
}

CheckReport positivity(const SeriesCatalog& cat, const CheckParams& p) {
  Outcome out("T49", static_cast<std::size_t>(p.mmax));
  for (int m = 2; m <= p.mmax; ++m) {
    const bool ok = check_positivity(m, cat, order_for(m, p.order));
    out.require(ok, static_cast<std::size_t>(m), Rational(ok ? 1 : 0), Rational(1),
                "E*_{2m} in B Q+[B, C]");
  }
  return out.finish();
}

CheckReport printed_decompositions(const SeriesCatalog& cat, const CheckParams& p) {
  Outcome out("EXAMPLE-P1", p.order);
  const GradedPoly e8 = Rational(1, 17) * (Rational(9) * B() * B() + Rational(8) * B() * C() * C());
  const GradedPoly e10 =
      Rational(1, 31) * (Rational(27) * B() * B() * C() + Rational(4) * B() * pow(C(), 3));
  const GradedPoly e12 = Rational(1, 691) * (Rational(189) * pow(B(), 3) +
                                             Rational(486) * B() * B() * C() * C() +
                                             Rational(16) * B() * pow(C(), 4));
  same_poly(out, e_star_poly(4, cat, order_for(4, p.order)), e8, "E*8 = (9B^2 + 8BC^2)/17");
  same_poly(out, e_star_poly(5, cat, order_for(5, p.order)), e10, "E*10 = (27B^2C + 4BC^3)/31");
  same_poly(out, e_star_poly(6, cat, order_for(6, p.order)), e12,
            "E*12 = (189B^3 + 486B^2C^2 + 16BC^4)/691");
  out.series(evaluate(e10, cat, p.order), cat.Estar(10, p.order), "E*10 series");
  out.series(evaluate(e12, cat, p.order), cat.Estar(12, p.order), "E*12 series");

  same_poly(out, serre_delta(C() * C()), -(B() * C()), "delta C^2 = -BC");
  same_poly(out, serre_delta(B() * C()), Rational(-1, 2) * B() * B() - B() * C() * C(),
            "delta BC = -B^2/2 - BC^2");
  same_poly(out, serre_delta(pow(C(), 3)), Rational(-3, 2) * B() * C() * C(), "delta C^3 = -(3/2)BC^2");
  return out.finish();
}

CheckReport negative_images(const SeriesCatalog&, const CheckParams&) {
  constexpr int kMax = 10;
  Outcome out("LEMMA-NEG", kMax);
  for (int k = 1; k <= kMax; ++k) {
    for (int j = 0; 2 * j <= k; ++j) {
      const GradedPoly f = pow(B(), static_cast<unsigned>(j)) * pow(C(), static_cast<unsigned>(k - 2 * j));
      const GradedPoly df = serre_delta(f, 2 * k);
      const std::string what = "delta(B^" + std::to_string(j) + " C^" + std::to_string(k - 2 * j) +
                               ") in B Q-[B, C]";
      out.require(!df.is_zero(), static_cast<std::size_t>(k), Rational(0), Rational(-1), what);
      for (const auto& [mono, coeff] : df.terms()) {
        out.require(mono.a == 0 && mono.b >= 1 && coeff.sign() < 0, static_cast<std::size_t>(k),
                    coeff, Rational(0), what);
      }
    }
  }
  return out.finish();
}

CheckReport kernel_of_delta(const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("DELTA-D", n);
  same_poly(out, serre_delta(D(), 4), GradedPoly(Ring::Level2), "delta D = 0");
  out.series(theta(cat.D(n)), cat.A(n) * cat.D(n), "qD' = A D");

  const GradedPoly disc = pow(level1::E4(), 3) - pow(level1::E6(), 2);
  same_poly(out, serre_partial(disc, 12), GradedPoly(Ring::Level1), "partial(E4^3 - E6^2) = 0");
  out.series(theta(cat.Delta(n)), cat.E(2, n) * cat.Delta(n), "q Delta' = E2 Delta");

  // Level-1 system used by the partial operator.
  same_poly(out, serre_partial(level1::E2(), 2),
            Rational(-1, 12) * (level1::E2() * level1::E2() + level1::E4()), "partial E2");
  same_poly(out, serre_partial(level1::E4(), 4), Rational(-1, 3) * level1::E6(), "partial E4");
  same_poly(out, serre_partial(level1::E6(), 6), Rational(-1, 2) * level1::E4() * level1::E4(),
            "partial E6");
  return out.finish();
}

CheckReport dimension_table(const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = std::max<std::size_t>(p.order, 16);
  Outcome out("TB1-CUSP", n);
  const std::vector<int> dims{1, 2, 2, 3, 3, 4};
  for (int k = 1; k <= 6; ++k) {
    out.value(static_cast<std::size_t>(2 * k), Rational(modular_dimension(2 * k)), Rational(dims[k - 1]),
              "dim M_{2k}");
  }

  // Cusp forms: zero constant term, modular of the stated weight.
  const GradedPoly d = D();
  const std::vector<std::pair<GradedPoly, int>> cusp{
      {B() * d, 8}, {B() * C() * d, 10}, {B() * B() * d, 12}, {B() * d * d, 12}};
  for (const auto& [f, w] : cusp) {
    const QSeries s = evaluate(f, cat, n);
    out.value(static_cast<std::size_t>(w), s[0], Rational(0), "cusp form " + f.to_string());
    const BasisDecomposition dec = decompose_modular(s, w, cat);
    same_poly(out, dec.to_poly(), f, "decomposition of " + f.to_string());
  }
  out.series(evaluate(B() * B() * d, cat, n), cat.Delta(n), "Delta = B^2 D");
  out.series(theta(cat.Delta(n)), cat.E(2, n) * cat.Delta(n), "partial Delta = 0");
  return out.finish();
}

}  // namespace

void add_form_checks(std::vector<TheoremCheck>& out) {
  out.push_back({"P4", "delta A = -(A^2+B)/4, delta B = -BC, delta C = -B/2",
                 "closed system for the level-2 Serre derivative", serre_system});
  out.push_back({"T49", "E*_{2m} in B Q+[B, C] for 2 <= m <= mmax", "positivity of E*_{2m} in B, C",
                 positivity});
  out.push_back({"EXAMPLE-P1", "E*8, E*10, E*12 in B, C and delta of C^2, BC, C^3",
                 "printed decompositions", printed_decompositions});
  out.push_back({"LEMMA-NEG", "delta(B^j C^{k-2j}) in B Q-[B, C] for k <= 10",
                 "negativity of delta on the basis", negative_images});
  out.push_back({"DELTA-D", "delta D = 0 and partial Delta = 0", "kernels of the Serre derivatives",
                 kernel_of_delta});
  out.push_back({"TB1-CUSP", "dimensions of M_{2k} and cusp form bases up to weight 12",
                 "table of M_{2k} and S_{2k}", dimension_table});
}

}  // namespace eisen::checks
