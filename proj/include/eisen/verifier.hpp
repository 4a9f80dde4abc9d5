#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eisen/eisenstein.hpp"
#include "eisen/qseries.hpp"

namespace eisen {

/// Truncation order for series identities and n-ranges for coefficient
/// identities. Every report certifies only the stated finite prefix.
struct CheckParams {
  std::size_t order = 64;
  std::size_t nmin = 0;
  std::size_t nmax = 200;
  std::size_t tau_max = 1000;
  int mmax = 20;
};

struct CheckReport {
  std::string id;
  std::size_t order = 0;
  bool passed = true;
  std::optional<Discrepancy> first_discrepancy;
  double elapsed_ms = 0.0;
  std::vector<std::string> notes;
};

struct TheoremCheck {
  std::string id;
  std::string description;
  std::string anchor;
  std::function<CheckReport(const SeriesCatalog&, const CheckParams&)> run;
};

class Registry {
 public:
  static const Registry& builtin();

  explicit Registry(std::vector<TheoremCheck> entries);

  [[nodiscard]] const std::vector<TheoremCheck>& entries() const { return entries_; }
  [[nodiscard]] const TheoremCheck* find(std::string_view id) const;

  /// "all", an exact id, or a family name such as "KS-DE" (every id that
  /// starts with "KS-DE "). Throws UnknownTheoremId when nothing matches.
  [[nodiscard]] std::vector<const TheoremCheck*> select(std::string_view selector) const;

 private:
  std::vector<TheoremCheck> entries_;
};

/// Runs one registered check. A trailing " n=K" restricts a range check to
/// n = K; a trailing " m=K" on a non-family id sets mmax.
CheckReport run_check(std::string_view id, const CheckParams& params, const SeriesCatalog& catalog);
CheckReport run_check(std::string_view id, const CheckParams& params);

/// Runs every selected check; reports come back in natural id order.
std::vector<CheckReport> run_selection(std::string_view selector, const CheckParams& params,
                                       const SeriesCatalog& catalog, bool parallel);
std::vector<CheckReport> run_all(const CheckParams& params, bool parallel);

/// Orders digit runs numerically, so "KS-DE m=9" < "KS-DE m=10".
bool natural_less(std::string_view a, std::string_view b);

/// One-line human-readable summary.
std::string format_report_line(const CheckReport& report);

/// JSON object {id, order, status, first_discrepancy, elapsed_ms, notes};
/// elapsed_ms is null unless `timing` is set, so output is reproducible.
std::string report_to_json(const std::vector<CheckReport>& reports, bool timing);

enum class ExportFormat { Json, Csv };

/// Series or arithmetic table rendered as JSON {name, order, coefficients}
/// or CSV with header "n,value". Throws UnknownName.
std::string export_named(const std::string& name, std::size_t order, ExportFormat format,
                         const SeriesCatalog& catalog);

/// Names accepted by export_named besides catalog series.
std::vector<std::string> exportable_tables();

}  // namespace eisen
