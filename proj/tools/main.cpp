// Command-line front end: verify, export, list.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eisen/errors.hpp"
#include "eisen/verifier.hpp"

namespace {

int verify(const std::string& selector, const eisen::CheckParams& params, bool parallel, bool json,
           bool timing) {
  const eisen::SeriesCatalog catalog;
  const auto reports = eisen::run_selection(selector, params, catalog, parallel);
  bool all_passed = true;
  for (const auto& r : reports) all_passed = all_passed && r.passed;

  if (json) {
    std::cout << eisen::report_to_json(reports, timing);
  } else {
    std::size_t failures = 0;
    for (const auto& r : reports) {
      std::cout << eisen::format_report_line(r);
      if (timing) std::cout << "  (" << static_cast<long long>(r.elapsed_ms) << " ms)";
      std::cout << '\n';
      if (!r.passed) ++failures;
    }
    std::cout << reports.size() - failures << '/' << reports.size() << " checks passed\n";
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Eisenstein series identities"};
  app.require_subcommand(1);

  eisen::CheckParams params;
  std::string selector;
  bool parallel = false;
  bool json = false;
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run registered checks");
  verify_cmd->add_option("id", selector, "Check id, family name, or 'all'")->required();
  verify_cmd->add_option("--order", params.order, "Truncation order for series identities")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--nmax", params.nmax, "Upper end of n-ranges");
  verify_cmd->add_option("--tau-max", params.tau_max, "Range for tau properties");
  verify_cmd->add_option("--mmax", params.mmax, "Largest m for positivity")->check(CLI::Range(2, 200));
  verify_cmd->add_flag("--parallel", parallel, "Run checks on a thread pool");
  verify_cmd->add_flag("--json", json, "Emit a JSON report");
  verify_cmd->add_flag("--timing", timing, "Include elapsed times");

  std::string name;
  std::size_t order = 10;
  std::string format = "json";
  auto* export_cmd = app.add_subcommand("export", "Print a series or arithmetic table");
  export_cmd->add_option("name", name, "Series or table name")->required();
  export_cmd->add_option("--order", order, "Highest exponent or index")->required();
  export_cmd->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* list_cmd = app.add_subcommand("list", "List registered checks and exportable names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify_cmd) return verify(selector, params, parallel, json, timing);
    if (*export_cmd) {
      const eisen::SeriesCatalog catalog;
      const auto fmt = format == "csv" ? eisen::ExportFormat::Csv : eisen::ExportFormat::Json;
      std::cout << eisen::export_named(name, order, fmt, catalog);
      return 0;
    }
    if (*list_cmd) {
      for (const auto& e : eisen::Registry::builtin().entries()) {
        std::cout << e.id << "\t" << e.description << "\t[" << e.anchor << "]\n";
      }
      std::cout << "\nseries: E<2k>, E<2k>star, A, B, C, D, Delta, theta3\ntables:";
      for (const auto& t : eisen::exportable_tables()) std::cout << ' ' << t;
      std::cout << '\n';
      return 0;
    }
  } catch (const eisen::UnknownTheoremId& e) {
    std::cerr << "unknown theorem id: " << e.what() << '\n';
    return 2;
  } catch (const eisen::UnknownName& e) {
    std::cerr << "unknown name: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
