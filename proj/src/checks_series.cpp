// Series-level identities: differential equations, discriminant relations
// and Hankel-type determinants.

#include "checks.hpp"
#include "eisen/scalars.hpp"

namespace eisen::checks {

namespace {

using Matrix = std::vector<std::vector<QSeries>>;

// (m-1)/(2 pi^2 zeta(2m-2)) * zeta(2k) zeta(2m-2k)
Rational level1_weight(int m, int k) {
  const PiScaled den = kPiSquared * zeta_even(m - 1);
  return Rational(m - 1, 2) * ratio(zeta_even(k) * zeta_even(m - k), den);
}

// (2m-2)/(pi^2 lambda(2m-2)) * lambda(2k) lambda(2m-2k)
Rational level2_weight(int m, int k) {
  const PiScaled den = kPiSquared * lambda_even(m - 1);
  return Rational(2 * m - 2) * ratio(lambda_even(k) * lambda_even(m - k), den);
}

CheckReport ramanujan(const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("RAM-DE", n);
  const QSeries P = cat.E(2, n);
  const QSeries Q = cat.E(4, n);
  const QSeries R = cat.E(6, n);
  out.series(theta(P), (P * P - Q) * Rational(1, 12), "qP' = (P^2 - Q)/12");
  out.series(theta(Q), (P * Q - R) * Rational(1, 3), "qQ' = (PQ - R)/3");
  out.series(theta(R), (P * R - Q * Q) * Rational(1, 2), "qR' = (PR - Q^2)/2");
  return out.finish();
}

CheckReport ramanujan_shen(int m, const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("RS-DE m=" + std::to_string(m), n);
  auto E = [&](int k) { return cat.E(2 * k, n); };

  QSeries rhs = QSeries::zero(n);
  for (int k = 1; k <= m - 1; ++k) {
    rhs += (E(k) * E(m - k) - E(m)) * level1_weight(m, k);
  }
  const QSeries lhs = theta(E(m - 1));
  out.series(lhs, rhs, "general form");

  switch (m) {
    case 2: out.series(lhs, (E(1) * E(1) - E(2)) * Rational(1, 12), "qE2' = (E2^2 - E4)/12"); break;
    case 3: out.series(lhs, (E(1) * E(2) - E(3)) * Rational(1, 3), "qE4' = (E2E4 - E6)/3"); break;
    case 4: out.series(lhs, (E(1) * E(3) - E(4)) * Rational(1, 2), "qE6' = (E2E6 - E8)/2"); break;
    case 5:
      out.series(lhs, (E(1) * E(4) - E(5)) * Rational(2, 3), "qE8' = (2/3)(E2E8 - E10)");
      out.series(E(2) * E(3), E(5), "E4E6 = E10");
      break;
    case 7: out.series(lhs, E(1) * E(6) - E(7), "qE12' = E2E12 - E14"); break;
    default: break;
  }
  return out.finish();
}

CheckReport level2_family(int m, const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("KS-DE m=" + std::to_string(m), n);
  auto E = [&](int k) { return cat.Estar(2 * k, n); };

  QSeries rhs = QSeries::zero(n);
  for (int k = 1; k <= m - 1; ++k) {
    rhs += (E(k) * E(m - k) - E(m)) * level2_weight(m, k);
  }
  const QSeries lhs = theta(E(m - 1));
  out.series(lhs, rhs, "general form");

  switch (m) {
    case 2:
      out.series(lhs, (E(1) * E(1) - E(2)) * Rational(1, 4), "qE*2' = (E*2^2 - E*4)/4");
      break;
    case 3: out.series(lhs, E(1) * E(2) - E(3), "qE*4' = E*2E*4 - E*6"); break;
    case 4:
      out.series(lhs,
                 (E(1) * E(3) * Rational(12) + E(2) * E(2) * Rational(5) - E(4) * Rational(17)) *
                     Rational(1, 8),
                 "qE*6' = (12E*2E*6 + 5E*4^2 - 17E*8)/8");
      break;
    case 5:
      out.series(lhs,
                 (E(1) * E(4) * Rational(34) + E(2) * E(3) * Rational(28) - E(5) * Rational(62)) *
                     Rational(1, 17),
                 "qE*8' = (34E*2E*8 + 28E*4E*6 - 62E*10)/17");
      break;
    default: break;
  }
  return out.finish();
}

CheckReport e6star_abc(const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("E6STAR-ABC", n);
  const QSeries A = cat.A(n);
  const QSeries B = cat.B(n);
  const QSeries C = cat.C(n);
  out.series(theta(cat.Estar(6, n)), (A * B * C * Rational(3) - B * B - B * C * C * Rational(2)) *
                                         Rational(1, 2),
             "qE*6' = (3ABC - B^2 - 2BC^2)/2");
  out.series(cat.Estar(8, n), (B * B * Rational(9) + B * C * C * Rational(8)) * Rational(1, 17),
             "E*8 = (9B^2 + 8BC^2)/17");
  return out.finish();
}

CheckReport hahn_system(const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("HAHN-SYS", n);
  const QSeries A = cat.A(n);
  const QSeries B = cat.B(n);
  const QSeries C = cat.C(n);
  out.series(theta(A), (A * A - B) * Rational(1, 4), "qP' = (P^2 - Q)/4");
  out.series(theta(C), (A * C - B) * Rational(1, 2), "qE' = (PE - Q)/2");
  out.series(theta(B), A * B - C * B, "qQ' = PQ - EQ");
  return out.finish();
}

CheckReport lemma_l4(const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("L4", n);
  const QSeries E4 = cat.E(4, n);
  const QSeries E6 = cat.E(6, n);
  out.series(eta_product(n) * Rational(1728),
             E6 * theta(E4) * Rational(3) - E4 * theta(E6) * Rational(2),
             "1728 Delta = 3 E6 qE4' - 2 E4 qE6'");
  return out.finish();
}

CheckReport minors_level1(const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("MINORS-L1", n);
  auto E = [&](int w) { return cat.E(w, n); };
  out.series(determinant(Matrix{{E(0), E(2)}, {E(2), E(4)}}), theta(E(2)) * Rational(-12),
             "|E0 E2; E2 E4| = -12 qE2'");
  out.series(determinant(Matrix{{E(0), E(2)}, {E(4), E(6)}}), theta(E(4)) * Rational(-3),
             "|E0 E2; E4 E6| = -3 qE4'");
  out.series(determinant(Matrix{{E(2), E(4)}, {E(4), E(6)}}), theta(E(6)) * Rational(2),
             "|E2 E4; E4 E6| = 2 qE6'");
  out.series(determinant(Matrix{{E(2), E(6)}, {E(4), E(8)}}), theta(E(8)) * Rational(3, 2),
             "|E2 E6; E4 E8| = (3/2) qE8'");
  return out.finish();
}

CheckReport garvan(const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("GARVAN", n);
  auto E = [&](int w) { return cat.E(w, n); };
  const QSeries delta1728 = eta_product(n) * Rational(1728);
  out.series(determinant(Matrix{{E(4), E(6), E(8)}, {E(6), E(8), E(10)}, {E(8), E(10), E(12)}}),
             delta1728 * delta1728 * Rational(-250, 691), "Hankel 3x3 = -(250/691)(1728 Delta)^2");
  return out.finish();
}

CheckReport discriminant_level1(const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("DIS", n);
  const QSeries delta = eta_product(n);
  const QSeries E4 = cat.E(4, n);
  const QSeries E6 = cat.E(6, n);
  out.series(delta, (pow(E4, 3) - pow(E6, 2)) * Rational(1, 1728), "Delta = (E4^3 - E6^2)/1728");
  out.series(determinant(Matrix{{E4, E6}, {E6, cat.E(8, n)}}), delta * Rational(1728),
             "|E4 E6; E6 E8| = 1728 Delta");
  return out.finish();
}

CheckReport discriminant_level2(const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("DELTA-L2", n);
  const QSeries delta = eta_product(n);
  const QSeries A = cat.A(n);
  const QSeries B = cat.B(n);
  const QSeries C = cat.C(n);
  const QSeries E6s = cat.Estar(6, n);
  const QSeries e4_abc = B * Rational(-3) + C * C * Rational(4);
  const QSeries e6_abc = B * C * Rational(9) - pow(C, 3) * Rational(8);
  out.series(cat.E(2, n), A * Rational(3) - C * Rational(2), "E2 = 3A - 2C");
  out.series(cat.E(4, n), e4_abc, "E4 = -3B + 4C^2");
  out.series(cat.E(6, n), e6_abc, "E6 = 9BC - 8C^3");
  out.series(delta, (pow(e4_abc, 3) - pow(e6_abc, 2)) * Rational(1, 1728),
             "Delta = ((-3B + 4C^2)^3 - (9BC - 8C^3)^2)/1728");
  out.series(delta, (pow(B, 3) - pow(E6s, 2)) * Rational(-1, 64), "Delta = -(E*4^3 - E*6^2)/64");
  out.series(delta * Rational(-64), E6s * theta(B) * Rational(3) - B * theta(E6s) * Rational(2),
             "-64 Delta = 3 E*6 qE*4' - 2 E*4 qE*6'");
  return out.finish();
}

CheckReport lemma_l5(const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("L5", n);
  const QSeries B = cat.B(n);
  out.series(determinant(Matrix{{cat.Estar(0, n), B}, {B, cat.Estar(8, n)}}),
             B * cat.D(n) * Rational(512, 17), "|E*0 E*4; E*4 E*8| = (512/17) B D");
  return out.finish();
}

CheckReport determinants_level2(const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("DET-L2", n);
  auto E = [&](int w) { return cat.Estar(w, n); };
  const QSeries B = cat.B(n);
  const QSeries C = cat.C(n);
  const QSeries D = cat.D(n);
  const QSeries delta = eta_product(n);

  out.series(determinant(Matrix{{E(4), E(6)}, {E(6), E(8)}}), delta * Rational(-576, 17),
             "|E*4 E*6; E*6 E*8| = -(2^6 3^2/17) Delta");
  out.series(determinant(Matrix{{E(4), E(8)}, {E(6), E(10)}}), C * delta * Rational(-11520, 527),
             "|E*4 E*8; E*6 E*10| = -(2^8 3^2 5/(17 31)) C Delta");
  out.series(determinant(Matrix{{E(6), E(8)}, {E(8), E(10)}}),
             (B * Rational(279) - C * C * Rational(92)) * delta * Rational(576, 8959),
             "|E*6 E*8; E*8 E*10| = (2^6 3^2/(17^2 31)) (279B - 92C^2) Delta");

  // 2^13 3^5 5^2 = 49766400 and 17^3 31^2 691 = 3262482563.
  const Rational constant = -Rational(BigInt(49766400), BigInt("3262482563"));
  out.series(determinant(Matrix{{E(4), E(6), E(8)}, {E(6), E(8), E(10)}, {E(8), E(10), E(12)}}),
             (B * Rational(961) + C * C * Rational(3136)) * B * D * delta * constant,
             "Hankel 3x3 of E* = -(2^13 3^5 5^2/(17^3 31^2 691)) (961B + 3136C^2) B D Delta");
  return out.finish();
}

CheckReport delta_family(const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("DELTA-FAMILY", n);
  const QSeries A = cat.A(n);
  const QSeries B = cat.B(n);
  auto delta4 = [&](const QSeries& s) { return theta(s) - A * s; };

  const QSeries reference = delta4(B);
  const QSeries c_squared = pow(cat.Estar(6, n), 2) / pow(B, 2);
  out.series(delta4(c_squared), reference, "delta(E*6^2/E*4^2) = delta E*4");
  out.series(delta4(cat.Estar(8, n) / B), reference, "delta(E*8/E*4) = delta E*4");
  out.series(delta4(cat.Estar(10, n) / cat.Estar(6, n)), reference, "delta(E*10/E*6) = delta E*4");
  out.series(delta4(cat.E(4, n)), reference, "delta E4 = delta E*4");
  return out.finish();
}

CheckReport theta_relation(const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("THETA-REL", n);
  out.series(negate_q(pow(cat.theta3(n), 8)), cat.B(n), "E*4(q) = theta3^8(-q)");
  return out.finish();
}

CheckReport level1_polynomials(const SeriesCatalog& cat, const CheckParams& p) {
  const std::size_t n = p.order;
  Outcome out("E2K-POLY", n);
  auto E = [&](int w) { return cat.E(w, n); };
  out.series(E(8), E(4) * E(4), "E8 = E4^2");
  out.series(E(10), E(4) * E(6), "E10 = E4 E6");
  out.series(E(12) * Rational(691), pow(E(4), 3) * Rational(441) + pow(E(6), 2) * Rational(250),
             "691 E12 = 441 E4^3 + 250 E6^2");
  out.series(E(14), E(4) * E(4) * E(6), "E14 = E4^2 E6");
  return out.finish();
}

CheckReport scalar_recursions(const SeriesCatalog&, const CheckParams& p) {
  Outcome out("ZETA-REC", static_cast<std::size_t>(p.mmax));
  for (int m = 2; m <= p.mmax; ++m) {
    const auto idx = static_cast<std::size_t>(m);
    out.require(check_scalar_recursion(ZetaKind::Zeta, m), idx, Rational(0), Rational(1),
                "zeta(2m) recursion");
    out.require(check_scalar_recursion(ZetaKind::Lambda, m), idx, Rational(0), Rational(1),
                "lambda(2m) recursion");
  }
  for (int k = 1; k <= p.mmax; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const Rational r = ratio(lambda_even(k), zeta_even(k));
    out.value(idx, r, Rational(1) - Rational(BigInt(1), BigInt(1) << (2 * k)),
              "lambda/zeta = 1 - 4^-k");
  }
  return out.finish();
}

CheckReport bernoulli_values(const SeriesCatalog&, const CheckParams&) {
  Outcome out("BERNOULLI", 14);
  const std::vector<std::pair<int, Rational>> printed{
      {0, Rational(1)},       {1, Rational(-1, 2)}, {2, Rational(1, 6)},       {4, Rational(-1, 30)},
      {6, Rational(1, 42)},   {8, Rational(-1, 30)}, {10, Rational(5, 66)},     {12, Rational(-691, 2730)},
      {14, Rational(7, 6)},
  };
  for (const auto& [n, v] : printed) out.value(static_cast<std::size_t>(n), bernoulli(n), v, "B_n");
  for (int k = 1; k <= 30; ++k) {
    out.value(static_cast<std::size_t>(2 * k + 1), bernoulli(2 * k + 1), Rational(0),
              "B_{2k+1} = 0");
  }
  return out.finish();
}

CheckReport normalization_constants(const SeriesCatalog& cat, const CheckParams& p) {
  Outcome out("ESTAR-COEFF", p.order);
  const std::vector<Rational> level2{Rational(8),      Rational(-16),   Rational(8),
                                     Rational(-32, 17), Rational(8, 31), Rational(-16, 691)};
  for (int k = 1; k <= 6; ++k) {
    out.value(static_cast<std::size_t>(k), level2_constant(k), level2[k - 1], "E*_{2k} constant");
  }
  const std::vector<Rational> level1{Rational(-24),  Rational(240),          Rational(-504),
                                     Rational(480),  Rational(-264),         Rational(65520, 691),
                                     Rational(-24)};
  for (int k = 1; k <= 7; ++k) {
    out.value(static_cast<std::size_t>(k), level1_constant(k), level1[k - 1], "E_{2k} constant");
  }
  for (int k = 0; k <= 12; ++k) {
    out.value(static_cast<std::size_t>(k), cat.Estar(2 * k, p.order)[0], Rational(1),
              "constant term of E*_{2k}");
  }
  return out.finish();
}

}  // namespace

void add_differential_checks(std::vector<TheoremCheck>& out) {
  out.push_back({"RAM-DE", "qP' = (P^2-Q)/12, qQ' = (PQ-R)/3, qR' = (PR-Q^2)/2",
                 "Ramanujan's differential equations", ramanujan});
  for (int m = 2; m <= 12; ++m) {
    out.push_back({"RS-DE m=" + std::to_string(m),
                   "qE'_{2m-2} as a zeta-weighted sum of E_{2k}E_{2m-2k} - E_{2m}",
                   "Ramanujan-Shen differential equation",
                   [m](const SeriesCatalog& c, const CheckParams& p) { return ramanujan_shen(m, c, p); }});
  }
  for (int m = 2; m <= 12; ++m) {
    out.push_back({"KS-DE m=" + std::to_string(m),
                   "qE*'_{2m-2} as a lambda-weighted sum of E*_{2k}E*_{2m-2k} - E*_{2m}",
                   "level-2 differential equations from the second theta function",
                   [m](const SeriesCatalog& c, const CheckParams& p) { return level2_family(m, c, p); }});
  }
  out.push_back({"E6STAR-ABC", "qE*6' = (3ABC - B^2 - 2BC^2)/2", "qE*6' in A, B, C", e6star_abc});
  out.push_back({"HAHN-SYS", "closed system for (A, C, B)", "Hahn's system", hahn_system});
  out.push_back({"L4", "1728 Delta = 3E6 qE4' - 2E4 qE6'", "discriminant as a differential equation",
                 lemma_l4});
  out.push_back({"MINORS-L1", "2x2 minors with E0, E2 are multiples of qE'_{2k}",
                 "minors of the Hankel matrix of E_{2k}", minors_level1});
  out.push_back({"GARVAN", "3x3 Hankel determinant of E_{2k}", "Garvan's identity", garvan});
  out.push_back({"DIS", "Delta = (E4^3 - E6^2)/1728", "discriminant via E4, E6", discriminant_level1});
  out.push_back({"DELTA-L2", "Delta = -(E*4^3 - E*6^2)/64 with E2, E4, E6 in A, B, C",
                 "discriminant via level-2 series", discriminant_level2});
  out.push_back({"L5", "|E*0 E*4; E*4 E*8| = (512/17) B D", "determinant with E*0", lemma_l5});
  out.push_back({"DET-L2", "2x2 and 3x3 Hankel determinants of E*_{2k}",
                 "level-2 Hankel determinants", determinants_level2});
  out.push_back({"DELTA-FAMILY", "equal Serre derivatives on M4", "delta-equal family", delta_family});
  out.push_back({"THETA-REL", "E*4(q) = theta3^8(-q)", "eight squares and E*4", theta_relation});
  out.push_back({"E2K-POLY", "E8, E10, E12, E14 as polynomials in E4, E6",
                 "polynomial relations of level-1 series", level1_polynomials});
  out.push_back({"ZETA-REC", "quadratic recursions for zeta(2m) and lambda(2m)",
                 "Euler's even zeta values", scalar_recursions});
  out.push_back({"BERNOULLI", "printed Bernoulli numbers and vanishing odd ones", "Bernoulli numbers",
                 bernoulli_values});
  out.push_back({"ESTAR-COEFF", "expansion constants of E_{2k} and E*_{2k}",
                 "normalized Eisenstein series", normalization_constants});
}

}  // namespace eisen::checks
