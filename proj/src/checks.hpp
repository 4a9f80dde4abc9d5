#pragma once

// Shared helpers for the theorem registry; not part of the public API.

#include <functional>
#include <string>
#include <vector>

#include "eisen/arith.hpp"
#include "eisen/verifier.hpp"

namespace eisen::checks {

/// Collects the outcome of one check. Keeps the failure with the smallest
/// index so the report points at the earliest affected coefficient.
class Outcome {
 public:
  Outcome(std::string id, std::size_t order) { report_.id = std::move(id), report_.order = order; }

  void series(const QSeries& lhs, const QSeries& rhs, const std::string& what);
  void value(std::size_t n, const Rational& lhs, const Rational& rhs, const std::string& what);
  void require(bool ok, std::size_t n, const Rational& lhs, const Rational& rhs,
               const std::string& what);
  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  [[nodiscard]] bool passed() const { return report_.passed; }
  CheckReport finish() { return std::move(report_); }

 private:
  CheckReport report_;
};

/// f(0..max_n) as a vector.
std::vector<Rational> tabulate(const std::function<Rational(std::uint64_t)>& f, std::size_t max_n);

/// sum_{j=0}^{n} a[j] b[n-j].
Rational convolve_at(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t n);

/// First n of the range, clamped below by `floor`.
inline std::size_t range_start(const CheckParams& p, std::size_t floor = 0) {
  return std::max(p.nmin, floor);
}

void add_differential_checks(std::vector<TheoremCheck>& out);
void add_arithmetic_checks(std::vector<TheoremCheck>& out);
void add_form_checks(std::vector<TheoremCheck>& out);

}  // namespace eisen::checks
