#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <string>

#include "eisen/qseries.hpp"

namespace eisen {

/// -4k / B_{2k}: the q-expansion constant of E_{2k}.
Rational level1_constant(int k);

/// -(1/(1 - 2^{2k})) * 4k / B_{2k}: the q-expansion constant of E*_{2k}.
Rational level2_constant(int k);

/// E_{2k} = 1 + level1_constant(k) * sum sigma_{2k-1}(n) q^n, k >= 1.
QSeries eisenstein_level1(int k, std::size_t order);

/// E*_{2k} = 1 + level2_constant(k) * sum sigma*_{2k-1}(n) q^n; E*_0 = 1.
QSeries eisenstein_level2(int k, std::size_t order);

/// q * prod_{n>=1} (1 - q^n)^24 by repeated multiplication of sparse factors.
QSeries eta_product(std::size_t order);

/// Delta from the eta product, checked against (E4^3 - E6^2)/1728 and
/// -(E*4^3 - E*6^2)/64. Throws CrossCheckMismatch naming the routes.
QSeries discriminant(std::size_t order);

/// sum_{m in Z} q^{m^2}.
QSeries theta3(std::size_t order);

/// C = E*6 / E*4, checked against 1 + 24 sum sigma#(n) q^n.
QSeries series_C(std::size_t order);

/// D = -(E*4 - C^2)/64, checked against q * sum delta8(n) q^n for n <= 50.
QSeries series_D(std::size_t order);

/// Memoized named series, shared by concurrent checks.
///
/// Names: "E<2k>" (level 1, "E0" is 1), "E<2k>star" (level 2), "Delta",
/// "theta3", "A", "B", "C", "D". A request at a smaller order truncates the
/// stored series; a larger order recomputes and replaces it.
class SeriesCatalog {
 public:
  SeriesCatalog() = default;
  SeriesCatalog(const SeriesCatalog&) = delete;
  SeriesCatalog& operator=(const SeriesCatalog&) = delete;

  QSeries get(const std::string& name, std::size_t order) const;

  QSeries E(int two_k, std::size_t order) const { return get("E" + std::to_string(two_k), order); }
  QSeries Estar(int two_k, std::size_t order) const {
    return get("E" + std::to_string(two_k) + "star", order);
  }
  QSeries A(std::size_t order) const { return get("A", order); }
  QSeries B(std::size_t order) const { return get("B", order); }
  QSeries C(std::size_t order) const { return get("C", order); }
  QSeries D(std::size_t order) const { return get("D", order); }
  QSeries Delta(std::size_t order) const { return get("Delta", order); }
  QSeries theta3(std::size_t order) const { return get("theta3", order); }

  /// Whether `name` is a valid catalog name.
  static bool known(const std::string& name);

 private:
  static QSeries build(const std::string& name, std::size_t order);

  mutable std::mutex mutex_;
  mutable std::map<std::string, QSeries> memo_;
};

}  // namespace eisen
