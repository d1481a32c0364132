// Command-line front end: run a problem file, verify golden fixtures, or
// sweep random instances.
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "young/errors.hpp"
#include "young/golden.hpp"
#include "young/problem_file.hpp"
#include "young/report.hpp"
#include "young/sweep.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInputError = 2;

std::vector<std::string> split_methods(const std::string& text) {
  // Split on commas outside parentheses so "polya-higher(2,0.5)" stays whole.
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int run(const std::string& file, const std::string& format, const std::string& methods) {
  young::ProblemFile pf = young::load_problem_file(file);
  std::vector<std::string> names = methods.empty() ? pf.methods : split_methods(methods);
  std::vector<young::MethodSpec> specs;
  try {
    specs = young::expand_methods(names, pf.instance.options());
  } catch (const young::UnknownMethod& e) {
    throw young::ValidationError("methods", e.what());
  }
  const young::Report report = young::run_report(pf.instance, specs);
  std::cout << (format == "json" ? young::format_json(report) : young::format_table(report));
  return report.oracle ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds for the Young integral functional"};
  app.require_subcommand(1);

  std::string file;
  std::string format = "table";
  std::string methods;
  auto* run_cmd = app.add_subcommand("run", "Evaluate estimators on a problem file");
  run_cmd->add_option("file", file, "Problem file (JSON)")->required();
  run_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  run_cmd->add_option("--methods", methods, "Comma-separated method ids (overrides the file)");

  std::string golden_dir;
  auto* verify_cmd = app.add_subcommand("verify", "Recompute golden fixtures");
  verify_cmd->add_option("--golden", golden_dir, "Fixture directory")->required();

  std::uint64_t seed = 42;
  int count = 100;
  auto* sweep_cmd = app.add_subcommand("sweep", "Property sweep over random instances");
  sweep_cmd->add_option("--seed", seed, "RNG seed");
  sweep_cmd->add_option("--count", count, "Number of instances")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*run_cmd) return run(file, format, methods);
    if (*verify_cmd) {
      const young::GoldenSummary summary = young::verify_golden(golden_dir);
      std::cout << summary.text();
      return summary.ok() ? kOk : kFailure;
    }
    if (*sweep_cmd) {
      const young::SweepSummary summary = young::sweep(seed, count);
      std::cout << summary.text();
      return summary.violations.empty() ? kOk : kFailure;
    }
  } catch (const young::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInputError;
  } catch (const young::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const young::MissingFixture& e) {
    std::cerr << "missing fixture: " << e.what() << "\n";
    return kInputError;
  } catch (const young::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}
