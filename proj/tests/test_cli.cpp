#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"
#include "young/golden.hpp"
#include "young/problem_file.hpp"
#include "young/report.hpp"
#include "young/sweep.hpp"

using namespace young;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("young_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string snapshot(const fs::path& dir) {
  std::string all;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    all += entry.path().filename().string() + std::string(std::istreambuf_iterator<char>(in), {});
  }
  return all;
}

}  // namespace

TEST_CASE("report on the quartic instance") {
  ProblemOptions o;
  o.integrand_offset = 1;
  const ProblemInstance inst = ProblemInstance::create(parse_expr("(x^4+1)^(1/4)-1"), 3, 2, 3.0, o);
  const Report rep = run_report(inst, expand_methods({"endpoint-slope", "polya-first", "taylor-jensen(1)"}, o));
  REQUIRE(rep.rows.size() == 3);
  REQUIRE(rep.oracle.has_value());
  const double sum = *rep.reported_sum();
  for (const ReportRow& row : rep.rows) {
    CAPTURE(row.method);
    CHECK(row.error.empty());
    CHECK(*row.sum_lower <= *row.sum_upper);
    CHECK(*row.sum_lower <= sum + 1e-9);
    CHECK(sum <= *row.sum_upper + 1e-9);
    if (row.method == "polya-first") {
      CHECK(std::fabs(*row.sum_lower - 9.00004286765564673) <= 1e-12);
      CHECK(std::fabs(*row.sum_upper - 9.00004287010602764) <= 1e-12);
    }
  }
  for (std::size_t i = 1; i < rep.rows.size(); ++i) CHECK(*rep.rows[i - 1].slack <= *rep.rows[i].slack);

  const auto j = nlohmann::json::parse(format_json(rep));
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][0].contains("diagnostics"));
  CHECK(format_table(rep).find("9.00004286") != std::string::npos);
}

TEST_CASE("report isolates failing rows") {
  const ProblemInstance inst = testing_support::make("x^3", 1.5, 1);
  MethodSpec bad = parse_method("polya-higher(1,7)");
  const Report rep = run_report(inst, {bad, parse_method("endpoint-slope")});
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[0].method == "endpoint-slope");
  CHECK(rep.rows[0].error.empty());
  CHECK_FALSE(rep.rows[1].error.empty());
}

TEST_CASE("method identifiers") {
  CHECK(parse_method("taylor-jensen(3)").n == 3);
  CHECK(parse_method("taylor-jensen", 2).n == 2);
  CHECK(*parse_method("polya-higher(2,1.25)").t == 1.25);
  CHECK(*parse_method("lp-remainder(1,inf)").p == kInf);
  CHECK(parse_method("lp-remainder(1,inf)").name() == "lp-remainder(1,inf)");
  CHECK_THROWS_AS(parse_method("taylor-magic(1)"), UnknownMethod);
  CHECK_THROWS_AS(parse_method("taylor-jensen(1.5)"), UnknownMethod);
  CHECK_THROWS_AS(parse_method("endpoint-slope(1)"), UnknownMethod);
  CHECK(expand_methods({"all"}, ProblemOptions{}).size() == all_method_names().size());
}

TEST_CASE("golden fixtures: shipped set and negative control") {
  const GoldenSummary shipped = verify_golden(YOUNG_GOLDEN_DIR);
  CHECK(shipped.outcomes.size() >= 8);
  for (const GoldenOutcome& o : shipped.outcomes) {
    CAPTURE(o.file);
    CHECK(o.error.empty());
  }
  const fs::path polya = fs::path(YOUNG_GOLDEN_DIR) / "polya1_quartic.json";
  CHECK(verify_fixture(polya).passed);
  CHECK(verify_fixture(fs::path(YOUNG_GOLDEN_DIR) / "es_linear.json").passed);

  const fs::path dir = scratch_dir("tamper");
  std::ifstream in(polya);
  nlohmann::json j = nlohmann::json::parse(in);
  j["expected"]["upper"] = j["expected"]["upper"].get<double>() - 1e-6;
  std::ofstream(dir / "tampered.json") << j.dump();
  const GoldenSummary tampered = verify_golden(dir);
  CHECK_FALSE(tampered.ok());
  CHECK(tampered.failed == 1);
  CHECK(tampered.text().find("ToleranceExceeded") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("golden verification is idempotent and read-only") {
  const std::string before = snapshot(YOUNG_GOLDEN_DIR);
  const std::string first = verify_golden(YOUNG_GOLDEN_DIR).text();
  const std::string second = verify_golden(YOUNG_GOLDEN_DIR).text();
  CHECK(first == second);
  CHECK(snapshot(YOUNG_GOLDEN_DIR) == before);
}

TEST_CASE("golden directory errors") {
  CHECK_THROWS_AS(verify_golden("/nonexistent/golden"), MissingFixture);
  const fs::path empty = scratch_dir("empty");
  CHECK_THROWS_AS(verify_golden(empty), MissingFixture);
  std::ofstream(empty / "broken.json") << "{";
  const GoldenSummary s = verify_golden(empty);
  CHECK(s.failed == 1);
  CHECK_FALSE(s.outcomes[0].error.empty());
  fs::remove_all(empty);
}

TEST_CASE("sweep is deterministic and replayable") {
  const std::string a = sweep(42, 20).text();
  const std::string b = sweep(42, 20).text();
  CHECK(a == b);
  CHECK(sweep(43, 20).text() != a);
  CHECK(sweep_instance_json(42, 3) == sweep_instance_json(42, 3));
  for (int i = 0; i < 20; ++i) CHECK_NOTHROW(load_problem_text(sweep_instance_json(42, i)));
}
