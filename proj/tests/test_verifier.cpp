#include <doctest.h>

#include <array>
#include <cstdio>
#include <memory>

#include "eisen/errors.hpp"
#include "eisen/verifier.hpp"

using namespace eisen;

namespace {

struct Run {
  int status;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(EISEN_CLI_PATH) + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto got = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), got);
  const int raw = pclose(pipe.release());
  return {WEXITSTATUS(raw), out};
}

}  // namespace

TEST_CASE("registry ids are unique and cover the families") {
  const auto& reg = Registry::builtin();
  CHECK(reg.find("RAM-DE") != nullptr);
  CHECK(reg.find("TABLE2") != nullptr);
  CHECK(reg.select("KS-DE").size() == 11);
  CHECK(reg.select("RS-DE").size() == 11);
  CHECK(reg.select("all").size() == reg.entries().size());
  CHECK_THROWS_AS(static_cast<void>(reg.select("NOPE")), UnknownTheoremId);
  CHECK_THROWS_AS(Registry({{"X", "", "", nullptr}, {"X", "", "", nullptr}}), std::logic_error);
  for (const auto& e : reg.entries()) {
    CHECK_FALSE(e.description.empty());
    CHECK_FALSE(e.anchor.empty());
  }
}

TEST_CASE("single checks from the operation examples") {
  CHECK(run_check("RAM-DE", CheckParams{}).passed);
  CHECK(run_check("KS-DE m=3", CheckParams{}).passed);
  const auto t5 = run_check("T5 n=1", CheckParams{});
  CHECK(t5.passed);
  CHECK(t5.id == "T5 n=1");
  CHECK_THROWS_AS(run_check("NOT-A-CHECK", CheckParams{}), UnknownTheoremId);
  CHECK_THROWS_AS(run_check("NOPE n=3", CheckParams{}), UnknownTheoremId);
}

TEST_CASE("natural ordering") {
  CHECK(natural_less("KS-DE m=9", "KS-DE m=10"));
  CHECK_FALSE(natural_less("KS-DE m=10", "KS-DE m=9"));
  CHECK(natural_less("T5", "T10"));
  CHECK(natural_less("T10", "T314"));
  CHECK_FALSE(natural_less("A", "A"));
}

TEST_CASE("every check passes at a reduced order") {
  CheckParams p;
  p.order = 8;
  p.nmax = 20;
  p.tau_max = 60;
  p.mmax = 8;
  for (const auto& r : run_all(p, false)) {
    INFO(format_report_line(r));
    CHECK(r.passed);
  }
}

TEST_CASE("sequential and parallel reports are byte-identical") {
  CheckParams p;
  p.order = 24;
  p.nmax = 40;
  p.tau_max = 100;
  p.mmax = 10;
  const auto seq = report_to_json(run_all(p, false), false);
  const auto par = report_to_json(run_all(p, true), false);
  CHECK(seq == par);
  CHECK(seq.find("\"elapsed_ms\": null") != std::string::npos);
}

TEST_CASE("report schema") {
  CheckReport r;
  r.id = "X";
  r.order = 3;
  r.passed = false;
  r.first_discrepancy = Discrepancy{2, Rational(1, 2), Rational(3)};
  const auto json = report_to_json({r}, false);
  CHECK(json.find("\"status\": \"fail\"") != std::string::npos);
  CHECK(json.find("\"lhs\": \"1/2\"") != std::string::npos);
  CHECK(format_report_line(r).rfind("FAIL X", 0) == 0);
}

TEST_CASE("exports") {
  const SeriesCatalog cat;
  CHECK(export_named("E2star", 3, ExportFormat::Json, cat) ==
        "{\"name\":\"E2star\",\"order\":3,\"coefficients\":[\"1\",\"8\",\"-8\",\"32\"]}\n");
  CHECK(export_named("theta3", 4, ExportFormat::Csv, cat) == "n,value\n0,1\n1,2\n2,0\n3,0\n4,2\n");
  const auto tau = export_named("tau", 10, ExportFormat::Csv, cat);
  CHECK(tau.rfind("n,value\n0,0\n1,1\n2,-24\n3,252\n4,-1472\n", 0) == 0);
  CHECK(tau.find("10,-115920\n") != std::string::npos);
  CHECK(export_named("sigmastar3", 4, ExportFormat::Csv, cat) ==
        "n,value\n0,-1/16\n1,1\n2,-7\n3,28\n4,-71\n");
  CHECK(export_named("r24", 2, ExportFormat::Csv, cat) == "n,value\n0,1\n1,48\n2,1104\n");
  CHECK(export_named("delta8", 3, ExportFormat::Csv, cat) == "n,value\n0,1\n1,8\n2,28\n3,64\n");
  CHECK_THROWS_AS(export_named("bogus", 3, ExportFormat::Json, cat), UnknownName);
  CHECK_THROWS_AS(export_named("sigma4", 3, ExportFormat::Json, cat), UnknownName);
}

TEST_CASE("command line") {
  const auto ok = cli("verify KS-DE --order 16");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("PASS KS-DE m=12") != std::string::npos);

  const auto json = cli("verify \"T5 n=1\" --json");
  CHECK(json.status == 0);
  CHECK(json.out.find("\"id\": \"T5 n=1\"") != std::string::npos);

  CHECK(cli("verify NOPE").status == 2);
  CHECK(cli("export bogus --order 3").status == 2);

  const auto csv = cli("export theta3 --order 4 --format csv");
  CHECK(csv.out == "n,value\n0,1\n1,2\n2,0\n3,0\n4,2\n");

  const auto listing = cli("list");
  CHECK(listing.status == 0);
  CHECK(listing.out.find("GARVAN") != std::string::npos);

  // Same flags, same bytes.
  CHECK(cli("verify all --order 12 --nmax 30 --tau-max 60 --mmax 6 --json").out ==
        cli("verify all --order 12 --nmax 30 --tau-max 60 --mmax 6 --json --parallel").out);
}
