#include "young/golden.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "young/bounds.hpp"
#include "young/problem_file.hpp"

namespace young {

namespace {

using nlohmann::json;

bool matches(double actual, double expected, double tolerance, std::optional<int> decimals) {
  if (decimals) {
    // The printed digits are a truncation: expected <= actual < expected + 10^-k.
    const double unit = std::pow(10.0, -*decimals);
    return actual >= expected - tolerance && actual < expected + unit + tolerance;
  }
  return std::fabs(actual - expected) <= tolerance;
}

}  // namespace

GoldenOutcome verify_fixture(const std::filesystem::path& file) {
  GoldenOutcome out;
  out.file = file.filename().string();
  try {
    std::ifstream in(file);
    if (!in) throw MissingFixture("cannot read " + file.string());
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.contains("problem") || !j.contains("method") || !j.contains("expected")) {
      throw ParseError("fixture needs problem, method and expected");
    }
    const ProblemFile problem = load_problem_text(j["problem"].dump());
    const auto& opts = problem.instance.options();
    const MethodSpec spec = expand_methods({j["method"].get<std::string>()}, opts).front();
    out.method = spec.name();
    const std::string quantity = j.value("quantity", std::string("sum"));
    if (quantity != "sum" && quantity != "native") throw ParseError("quantity must be sum or native");
    const double tolerance = j.value("tolerance", 1e-12);
    std::optional<int> decimals;
    if (j.contains("truncate_decimals")) decimals = j["truncate_decimals"].get<int>();

    const BoundResult r = evaluate(spec, problem.instance);
    const double shift = problem.instance.sum_shift();
    std::optional<double> lower = r.lower;
    std::optional<double> upper = r.upper;
    if (quantity == "sum") {
      lower = r.sum_lower();
      upper = r.sum_upper();
      if (lower) *lower += shift;
      if (upper) *upper += shift;
    }

    out.passed = true;
    for (const char* side : {"lower", "upper"}) {
      if (!j["expected"].contains(side)) continue;
      GoldenSide s;
      s.side = side;
      s.expected = j["expected"][side].get<double>();
      s.actual = std::string(side) == "lower" ? lower : upper;
      if (s.actual) {
        s.delta = *s.actual - s.expected;
        s.passed = matches(*s.actual, s.expected, tolerance, decimals);
      }
      out.passed = out.passed && s.passed;
      out.sides.push_back(s);
    }
    if (out.sides.empty()) throw ParseError("expected has neither lower nor upper");
  } catch (const Error& e) {
    out.passed = false;
    out.error = e.what();
  } catch (const json::exception& e) {
    out.passed = false;
    out.error = std::string("malformed fixture: ") + e.what();
  }
  return out;
}

GoldenSummary verify_golden(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw MissingFixture("no fixture directory " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  if (files.empty()) throw MissingFixture("no *.json fixtures in " + dir.string());
  std::sort(files.begin(), files.end());

  GoldenSummary summary;
  for (const auto& f : files) {
    summary.outcomes.push_back(verify_fixture(f));
    if (summary.outcomes.back().passed) {
      ++summary.passed;
    } else {
      ++summary.failed;
    }
  }
  return summary;
}

std::string GoldenSummary::text() const {
  std::ostringstream out;
  char buf[256];
  for (const GoldenOutcome& o : outcomes) {
    out << (o.passed ? "PASS " : "FAIL ") << o.file;
    if (!o.method.empty()) out << " [" << o.method << "]";
    if (!o.error.empty()) out << " error: " << o.error;
    for (const GoldenSide& s : o.sides) {
      if (s.actual) {
        std::snprintf(buf, sizeof buf, "  %s %.18g vs %.18g (delta %.3e)%s", s.side.c_str(), *s.actual, s.expected,
                      s.delta, s.passed ? "" : " ToleranceExceeded");
      } else {
        std::snprintf(buf, sizeof buf, "  %s absent, expected %.18g", s.side.c_str(), s.expected);
      }
      out << buf;
    }
    out << "\n";
  }
  out << passed << " passed, " << failed << " failed\n";
  return out.str();
}

}  // namespace young
