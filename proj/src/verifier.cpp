#include "eisen/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <future>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "checks.hpp"
#include "eisen/errors.hpp"

namespace eisen {

namespace checks {

void Outcome::series(const QSeries& lhs, const QSeries& rhs, const std::string& what) {
  if (auto bad = first_mismatch(lhs, rhs)) value(bad->n, bad->lhs, bad->rhs, what);
}

void Outcome::value(std::size_t n, const Rational& lhs, const Rational& rhs,
                    const std::string& what) {
  require(lhs == rhs, n, lhs, rhs, what);
}

void Outcome::require(bool ok, std::size_t n, const Rational& lhs, const Rational& rhs,
                      const std::string& what) {
  if (ok) return;
  report_.notes.push_back("failed: " + what + " at n=" + std::to_string(n));
  if (report_.passed || n < report_.first_discrepancy->n) {
    report_.first_discrepancy = Discrepancy{n, lhs, rhs};
  }
  report_.passed = false;
}

std::vector<Rational> tabulate(const std::function<Rational(std::uint64_t)>& f,
                               std::size_t max_n) {
  std::vector<Rational> out;
  out.reserve(max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) out.push_back(f(n));
  return out;
}

Rational convolve_at(const std::vector<Rational>& a, const std::vector<Rational>& b,
                     std::size_t n) {
  Rational acc;
  for (std::size_t j = 0; j <= n; ++j) acc += a[j] * b[n - j];
  return acc;
}

}  // namespace checks

namespace {

std::vector<TheoremCheck> builtin_entries() {
  std::vector<TheoremCheck> out;
  checks::add_differential_checks(out);
  checks::add_arithmetic_checks(out);
  checks::add_form_checks(out);
  return out;
}

// Splits "ID k=V" into ("ID", k, V); returns false if there is no such suffix.
bool split_parameter(std::string_view id, std::string_view& base, char& key, std::size_t& value) {
  const auto space = id.rfind(' ');
  if (space == std::string_view::npos) return false;
  const std::string_view tail = id.substr(space + 1);
  if (tail.size() < 3 || tail[1] != '=' || (tail[0] != 'n' && tail[0] != 'm')) return false;
  const auto* first = tail.data() + 2;
  const auto* last = tail.data() + tail.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return false;
  base = id.substr(0, space);
  key = tail[0];
  return true;
}

CheckReport timed_run(const TheoremCheck& check, const SeriesCatalog& catalog,
                      const CheckParams& params, std::string_view shown_id) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  try {
    report = check.run(catalog, params);
  } catch (const std::exception& e) {
    report = CheckReport{};
    report.order = params.order;
    report.passed = false;
    report.first_discrepancy = Discrepancy{0, Rational(0), Rational(0)};
    report.notes.push_back(std::string("exception: ") + e.what());
  }
  report.id = std::string(shown_id);
  const auto stop = std::chrono::steady_clock::now();
  report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return report;
}

std::string csv_rows(const std::vector<std::string>& values) {
  std::ostringstream os;
  os << "n,value\n";
  for (std::size_t n = 0; n < values.size(); ++n) os << n << ',' << values[n] << '\n';
  return os.str();
}

std::vector<std::string> strings_of(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

// Tables: tau, sigma<s>, sigmastar<s>, sigmasharp, r<s>, delta8.
std::optional<std::vector<Rational>> table_values(const std::string& name, std::size_t order) {
  auto suffix_int = [&](std::string_view prefix) -> std::optional<int> {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) {
      return std::nullopt;
    }
    int v = 0;
    const auto* first = name.data() + prefix.size();
    const auto* last = name.data() + name.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || v < 1) return std::nullopt;
    return v;
  };

  if (name == "tau") return tau_table(std::max<std::size_t>(order, 1)).values;
  if (name == "sigmasharp") {
    std::vector<Rational> out{Rational(0)};
    for (std::size_t n = 1; n <= order; ++n) out.push_back(sigma_sharp(n));
    return out;
  }
  if (name == "delta8") {
    return checks::tabulate(
        [](std::uint64_t n) { return Rational(static_cast<long long>(delta8_oracle(n))); }, order);
  }
  if (auto s = suffix_int("sigmastar"); s && *s % 2 == 1) {
    return checks::tabulate([s](std::uint64_t n) { return sigma_star(*s, n); }, order);
  }
  if (auto s = suffix_int("sigma"); s && *s % 2 == 1) {
    return checks::tabulate([s](std::uint64_t n) { return sigma(*s, n); }, order);
  }
  if (auto s = suffix_int("r")) return r_count(*s, order).values;
  return std::nullopt;
}

}  // namespace

Registry::Registry(std::vector<TheoremCheck> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = i + 1; j < entries_.size(); ++j) {
      if (entries_[i].id == entries_[j].id) {
        throw std::logic_error("duplicate theorem id " + entries_[i].id);
      }
    }
  }
}

const Registry& Registry::builtin() {
  static const Registry registry(builtin_entries());
  return registry;
}

const TheoremCheck* Registry::find(std::string_view id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::vector<const TheoremCheck*> Registry::select(std::string_view selector) const {
  std::vector<const TheoremCheck*> out;
  if (selector == "all") {
    for (const auto& e : entries_) out.push_back(&e);
    return out;
  }
  if (const auto* e = find(selector)) return {e};
  for (const auto& e : entries_) {
    if (e.id.size() > selector.size() && e.id.compare(0, selector.size(), selector) == 0 &&
        e.id[selector.size()] == ' ') {
      out.push_back(&e);
    }
  }
  if (out.empty()) throw UnknownTheoremId(std::string(selector));
  return out;
}

CheckReport run_check(std::string_view id, const CheckParams& params,
                      const SeriesCatalog& catalog) {
  const auto& registry = Registry::builtin();
  if (const auto* check = registry.find(id)) return timed_run(*check, catalog, params, id);

  std::string_view base;
  char key = 0;
  std::size_t value = 0;
  if (split_parameter(id, base, key, value)) {
    if (const auto* check = registry.find(base)) {
      CheckParams adjusted = params;
      if (key == 'n') {
        adjusted.nmin = value;
        adjusted.nmax = value;
      } else {
        adjusted.mmax = static_cast<int>(value);
      }
      return timed_run(*check, catalog, adjusted, id);
    }
  }
  throw UnknownTheoremId(std::string(id));
}

CheckReport run_check(std::string_view id, const CheckParams& params) {
  const SeriesCatalog catalog;
  return run_check(id, params, catalog);
}

std::vector<CheckReport> run_selection(std::string_view selector, const CheckParams& params,
                                       const SeriesCatalog& catalog, bool parallel) {
  std::vector<const TheoremCheck*> chosen;
  std::vector<std::string> shown;
  try {
    chosen = Registry::builtin().select(selector);
    for (const auto* c : chosen) shown.push_back(c->id);
  } catch (const UnknownTheoremId&) {
    // Parameterized single id such as "T5 n=1".
    return {run_check(selector, params, catalog)};
  }

  std::vector<CheckReport> reports(chosen.size());
  if (parallel) {
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), chosen.size()));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < chosen.size(); i = next++) {
          reports[i] = timed_run(*chosen[i], catalog, params, shown[i]);
        }
      });
    }
    for (auto& t : pool) t.join();
  } else {
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      reports[i] = timed_run(*chosen[i], catalog, params, shown[i]);
    }
  }
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    return natural_less(a.id, b.id);
  });
  return reports;
}

std::vector<CheckReport> run_all(const CheckParams& params, bool parallel) {
  const SeriesCatalog catalog;
  return run_selection("all", params, catalog, parallel);
}

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      auto na = a.substr(i, ie - i);
      auto nb = b.substr(j, je - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return (a.size() - i) < (b.size() - j);
}

std::string format_report_line(const CheckReport& report) {
  std::ostringstream os;
  os << (report.passed ? "PASS " : "FAIL ") << report.id << "  order=" << report.order;
  if (report.first_discrepancy) {
    const auto& d = *report.first_discrepancy;
    os << "  first discrepancy n=" << d.n << " lhs=" << d.lhs << " rhs=" << d.rhs;
  }
  for (const auto& note : report.notes) os << "\n    " << note;
  return os.str();
}

std::string report_to_json(const std::vector<CheckReport>& reports, bool timing) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["order"] = r.order;
    j["status"] = r.passed ? "pass" : "fail";
    if (r.first_discrepancy) {
      j["first_discrepancy"] = {{"n", r.first_discrepancy->n},
                                {"lhs", r.first_discrepancy->lhs.to_string()},
                                {"rhs", r.first_discrepancy->rhs.to_string()}};
    } else {
      j["first_discrepancy"] = nullptr;
    }
    j["elapsed_ms"] = timing ? nlohmann::ordered_json(r.elapsed_ms) : nlohmann::ordered_json(nullptr);
    j["notes"] = r.notes;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::vector<std::string> exportable_tables() {
  return {"tau", "sigma<s>", "sigmastar<s>", "sigmasharp", "r<s>", "delta8"};
}

std::string export_named(const std::string& name, std::size_t order, ExportFormat format,
                         const SeriesCatalog& catalog) {
  std::vector<std::string> values;
  if (SeriesCatalog::known(name)) {
    values = to_strings(catalog.get(name, order));
  } else if (auto table = table_values(name, order)) {
    table->resize(order + 1);
    values = strings_of(*table);
  } else {
    throw UnknownName(name);
  }

  if (format == ExportFormat::Csv) return csv_rows(values);
  nlohmann::ordered_json j;
  j["name"] = name;
  j["order"] = order;
  j["coefficients"] = values;
  return j.dump() + "\n";
}

}  // namespace eisen
