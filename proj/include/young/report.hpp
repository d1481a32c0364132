#pragma once

#include <optional>
#include <string>
#include <vector>

#include "young/bounds.hpp"

namespace young {

struct ReportRow {
  std::string method;
  std::string target;
  std::optional<double> lower;
  std::optional<double> upper;
  /// Bounds converted to the integral sum, including the integrand offset.
  std::optional<double> sum_lower;
  std::optional<double> sum_upper;
  bool applicable = false;
  /// min(oracle - lower, upper - oracle) over the sides present.
  std::optional<double> slack;
  /// Set when the estimator raised instead of returning.
  std::string error;
  BoundResult result;
};

struct Report {
  std::string function;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  Anchors anchors;
  double sum_shift = 0.0;
  std::optional<OracleDetails> oracle;
  std::string oracle_error;
  std::vector<ReportRow> rows;

  std::optional<double> reported_sum() const {
    if (!oracle) return std::nullopt;
    return oracle->sum + sum_shift;
  }
};

/// Runs every method, isolating failures per row. Rows are ordered by
/// slack, then method name; rows without a slack come last.
Report run_report(const ProblemInstance& inst, const std::vector<MethodSpec>& methods);

std::string format_table(const Report& report);
std::string format_json(const Report& report);

}  // namespace young
