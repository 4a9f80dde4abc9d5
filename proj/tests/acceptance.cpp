// Acceptance suite: one PASS/FAIL line per criterion. Arithmetic is exact, so
// the only tolerances are the wall-clock limits printed on each line.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "eisen/arith.hpp"
#include "eisen/graded.hpp"
#include "eisen/scalars.hpp"
#include "eisen/verifier.hpp"
#include "generators.hpp"

using namespace eisen;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

void expect_reports(Verdict& v, const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) v.expect(r.passed, format_report_line(r));
}

std::vector<CheckReport> run(const std::string& selector, const CheckParams& p) {
  static const SeriesCatalog catalog;
  return run_selection(selector, p, catalog, false);
}

Verdict ks_family() {
  Verdict v;
  CheckParams p;
  p.order = 64;
  const auto reports = run("KS-DE", p);
  v.expect(reports.size() == 11, "expected 11 KS-DE checks");
  expect_reports(v, reports);
  return v;
}

Verdict rs_family() {
  Verdict v;
  CheckParams p;
  p.order = 64;
  const auto reports = run("RS-DE", p);
  v.expect(reports.size() == 11, "expected 11 RS-DE checks");
  expect_reports(v, reports);
  return v;
}

Verdict tau_table_1000() {
  Verdict v;
  const QSeries delta = discriminant(1000);  // throws if any route disagrees
  const ArithTable t = tau_table(1000);
  for (std::size_t n = 0; n <= 1000; ++n) v.expect(delta[n] == t[n], "tau routes differ");
  v.expect(t[2] == Rational(-24) && t[3] == Rational(252) && t[4] == Rational(-1472), "printed tau");
  return v;
}

Verdict tau_identities() {
  Verdict v;
  CheckParams p;
  p.nmax = 200;
  for (const char* id : {"T8", "T314", "C1", "C2"}) expect_reports(v, run(id, p));
  const Rational example = Rational(252) - Rational(1, 4) * Rational(5 * 28 + 7 * 244);
  v.expect(example == Rational(-210), "worked example value");
  v.expect(example.is_integer() && example.numerator() % 70 == 0, "worked example mod 70");
  v.expect(tau_table(3)[3] - Rational(3, 12) * (Rational(5) * sigma(3, 3) + Rational(7) * sigma(5, 3)) ==
               Rational(-210),
           "worked example from tables");
  return v;
}

Verdict garvan48() {
  Verdict v;
  CheckParams p;
  p.order = 48;
  expect_reports(v, run("GARVAN", p));
  return v;
}

Verdict level2_determinants48() {
  Verdict v;
  CheckParams p;
  p.order = 48;
  expect_reports(v, run("L5", p));
  expect_reports(v, run("DET-L2", p));
  return v;
}

Verdict printed_polynomials() {
  using namespace level2;
  Verdict v;
  static const SeriesCatalog cat;
  v.expect(e_star_poly(4, cat) == Rational(1, 17) * (Rational(9) * B() * B() + Rational(8) * B() * C() * C()),
           "E*8");
  v.expect(e_star_poly(5, cat) ==
               Rational(1, 31) * (Rational(27) * B() * B() * C() + Rational(4) * B() * pow(C(), 3)),
           "E*10");
  v.expect(e_star_poly(6, cat) == Rational(1, 691) * (Rational(189) * pow(B(), 3) +
                                                      Rational(486) * B() * B() * C() * C() +
                                                      Rational(16) * B() * pow(C(), 4)),
           "E*12");
  for (int m = 2; m <= 20; ++m) v.expect(check_positivity(m, cat, 64), "positivity m=" + std::to_string(m));
  return v;
}

Verdict squares() {
  Verdict v;
  CheckParams p;
  p.nmax = 200;
  for (const char* id : {"JACOBI", "THETA-REL", "T9", "R24-FACT", "T10", "C10"}) {
    expect_reports(v, run(id, p));
  }
  v.expect(r_count(16, 1)[1] == Rational(32) && r_oracle(16, 1) == 32, "r16(1) = 32");
  v.expect(r_count(24, 1)[1] == Rational(48) && r_oracle(24, 1) == 48, "r24(1) = 48");
  return v;
}

Verdict printed_table() {
  Verdict v;
  const auto reports = run("TABLE2", CheckParams{});
  expect_reports(v, reports);
  for (const auto& note : reports.front().notes) std::cout << "    " << note << '\n';
  return v;
}

Verdict property_suites() {
  using namespace level2;
  Verdict v;
  gen::Source src(101);
  static const SeriesCatalog cat;
  constexpr int kCases = 100;

  for (int i = 0; i < kCases; ++i) {
    const std::size_t n = src.order();
    const QSeries a = src.series(n);
    const QSeries b = src.series(n);
    const QSeries c = src.series(n);
    v.expect(!first_mismatch((a * b) * c, a * (b * c)), "series associativity");
    v.expect(!first_mismatch(a * (b + c), a * b + a * c), "series distributivity");
    v.expect(!first_mismatch(a * b, b * a), "series commutativity");
    v.expect(!first_mismatch(theta(a * b), theta(a) * b + a * theta(b)), "theta Leibniz");
  }
  for (int i = 0; i < kCases; ++i) {
    const int w1 = 2 * src.integer(1, 4);
    const int w2 = 2 * src.integer(1, 4);
    const GradedPoly f = src.homogeneous(Ring::Level2, w1);
    const GradedPoly g = src.homogeneous(Ring::Level2, w2);
    v.expect(serre_delta(f * g, w1 + w2) == serre_delta(f, w1) * g + f * serre_delta(g, w2),
             "delta Leibniz");
    const GradedPoly f1 = src.homogeneous(Ring::Level1, w1);
    const GradedPoly g1 = src.homogeneous(Ring::Level1, w2);
    v.expect(serre_partial(f1 * g1, w1 + w2) == serre_partial(f1, w1) * g1 + f1 * serre_partial(g1, w2),
             "partial Leibniz");
    v.expect(!first_mismatch(evaluate(f * g, cat, 12), evaluate(f, cat, 12) * evaluate(g, cat, 12)),
             "evaluation morphism");
  }
  for (int i = 0; i < kCases; ++i) {
    const Rational s = src.rational();
    v.expect(serre_delta(s * D(), 4).is_zero(), "delta D = 0");
    const GradedPoly f = src.modular(4);
    v.expect(serre_delta(f, 4) == serre_delta(f + s * D(), 4), "delta-equal family in M4");
  }
  // Lemma on negativity: every basis monomial up to weight 20, plus random
  // positive combinations of them.
  for (int k = 1; k <= 10; ++k) {
    for (int j = 0; 2 * j <= k; ++j) {
      const GradedPoly df =
          serre_delta(pow(B(), static_cast<unsigned>(j)) * pow(C(), static_cast<unsigned>(k - 2 * j)), 2 * k);
      for (const auto& [m, c] : df.terms()) v.expect(m.a == 0 && m.b >= 1 && c.sign() < 0, "negativity");
    }
  }
  for (int i = 0; i < kCases; ++i) {
    const int k = src.integer(1, 10);
    GradedPoly f(Ring::Level2);
    for (int t = 0; t < 3; ++t) {
      const int j = src.integer(0, k / 2);
      f += GradedPoly::monomial(Ring::Level2, {0, j, k - 2 * j}, Rational(src.integer(1, 9), src.integer(1, 9)));
    }
    const GradedPoly df = serre_delta(f, 2 * k);
    for (const auto& [m, c] : df.terms()) {
      v.expect(m.a == 0 && m.b >= 1 && c.sign() < 0, "negativity on positive combinations");
    }
  }
  for (int m = 2; m <= 20; ++m) {
    v.expect(check_scalar_recursion(ZetaKind::Zeta, m), "zeta recursion");
    v.expect(check_scalar_recursion(ZetaKind::Lambda, m), "lambda recursion");
  }

  const auto start = std::chrono::steady_clock::now();
  const auto all = run_all(CheckParams{}, false);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  expect_reports(v, all);
  v.expect(secs < 60.0, "verify all took " + std::to_string(secs) + " s");
  return v;
}

struct Criterion {
  int number;
  std::string text;
  double limit_s;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "KS-DE m=2..12 at N=64", 10, ks_family},
      {2, "RS-DE m=2..12 at N=64 incl. qE8' = (2/3)(E2E8 - E10)", 60, rs_family},
      {3, "tau to n=1000 by three routes, printed tau(2..4)", 30, tau_table_1000},
      {4, "T8, T314, C1, C2 on 0..200 and the -210 example", 60, tau_identities},
      {5, "GARVAN at N=48", 60, garvan48},
      {6, "L5 and DET-L2 at N=48", 60, level2_determinants48},
      {7, "E*8, E*10, E*12 decompositions and positivity for m <= 20", 60, printed_polynomials},
      {8, "sums of squares on 0..200, r16(1)=32, r24(1)=48", 60, squares},
      {9, "printed table of arithmetic functions", 60, printed_table},
      {10, "property suites (>= 100 cases per law) and verify all < 60 s", 60, property_suites},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = v.ok && in_time;
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.text << "  ["
              << static_cast<long long>(secs * 1000) << " ms, limit " << c.limit_s << " s]";
    if (!v.ok) std::cout << "  " << v.detail;
    if (!in_time) std::cout << "  over time limit";
    std::cout << '\n';
  }
  std::cout << (10 - failures) << "/10 acceptance criteria passed\n";
  return failures == 0 ? 0 : 1;
}
