#include "young/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace young {

namespace {

std::string fmt(std::optional<double> v) {
  if (!v) return "-";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.18g", *v);
  return buf;
}

nlohmann::json json_value(std::optional<double> v) {
  if (!v) return nullptr;
  if (std::isinf(*v)) return *v > 0 ? "inf" : "-inf";
  return *v;
}

}  // namespace

Report run_report(const ProblemInstance& inst, const std::vector<MethodSpec>& methods) {
  Report report;
  report.function = inst.h().source();
  report.a = inst.a();
  report.b = inst.b();
  report.c = inst.c();
  report.anchors = inst.anchors();
  report.sum_shift = inst.sum_shift();
  try {
    report.oracle = oracle_details(inst);
  } catch (const Error& e) {
    report.oracle_error = e.what();
  }

  for (const MethodSpec& spec : methods) {
    ReportRow row;
    row.method = spec.name();
    try {
      row.result = evaluate(spec, inst);
      const BoundResult& r = row.result;
      row.target = r.target.label();
      row.lower = r.lower;
      row.upper = r.upper;
      row.applicable = r.applicable;
      if (auto lo = r.sum_lower()) row.sum_lower = *lo + report.sum_shift;
      if (auto up = r.sum_upper()) row.sum_upper = *up + report.sum_shift;
      if (auto sum = report.reported_sum()) {
        std::optional<double> slack;
        if (row.sum_lower) slack = *sum - *row.sum_lower;
        if (row.sum_upper) slack = slack ? std::min(*slack, *row.sum_upper - *sum) : *row.sum_upper - *sum;
        row.slack = slack;
      }
    } catch (const Error& e) {
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }

  std::stable_sort(report.rows.begin(), report.rows.end(), [](const ReportRow& x, const ReportRow& y) {
    if (x.slack.has_value() != y.slack.has_value()) return x.slack.has_value();
    if (x.slack && *x.slack != *y.slack) return *x.slack < *y.slack;
    return x.method < y.method;
  });
  return report;
}

std::string format_table(const Report& report) {
  std::ostringstream out;
  char buf[256];
  out << "h(x) = " << report.function << "\n";
  std::snprintf(buf, sizeof buf, "a = %.18g  b = %.18g  c = %.18g\n", report.a, report.b, report.c);
  out << buf;
  std::snprintf(buf, sizeof buf, "h^-1(b) = %.18g  alpha = %.18g  beta = %.18g\n", report.anchors.h_inv_b,
                report.anchors.alpha, report.anchors.beta);
  out << buf;
  if (report.sum_shift != 0.0) {
    std::snprintf(buf, sizeof buf, "sums include integrand offset %.18g\n", report.sum_shift);
    out << buf;
  }
  if (report.oracle) {
    std::snprintf(buf, sizeof buf, "oracle SUM = %.18g\noracle GAP = %.18g\n", *report.reported_sum(),
                  report.oracle->gap);
    out << buf;
  } else {
    out << "oracle failed: " << report.oracle_error << "\n";
  }
  out << "\n";
  std::snprintf(buf, sizeof buf, "%-24s %-20s %-26s %-26s %-12s %s\n", "method", "target", "SUM lower", "SUM upper",
                "slack", "ok");
  out << buf;
  for (const ReportRow& row : report.rows) {
    if (!row.error.empty()) {
      out << row.method << "  error: " << row.error << "\n";
      continue;
    }
    char slack[32] = "-";
    if (row.slack) std::snprintf(slack, sizeof slack, "%.3e", *row.slack);
    std::snprintf(buf, sizeof buf, "%-24s %-20s %-26s %-26s %-12s %s\n", row.method.c_str(), row.target.c_str(),
                  fmt(row.sum_lower).c_str(), fmt(row.sum_upper).c_str(), slack,
                  row.applicable ? "yes" : "hypotheses not verified");
    out << buf;
  }
  return out.str();
}

std::string format_json(const Report& report) {
  using nlohmann::json;
  json j;
  j["function"] = report.function;
  j["a"] = report.a;
  j["b"] = report.b;
  j["c"] = report.c;
  j["anchors"] = {{"h_inv_b", report.anchors.h_inv_b},
                  {"alpha", report.anchors.alpha},
                  {"beta", report.anchors.beta},
                  {"h_a", report.anchors.h_a}};
  j["sum_shift"] = report.sum_shift;
  if (report.oracle) {
    j["oracle"] = {{"sum", *report.reported_sum()},
                   {"gap", report.oracle->gap},
                   {"shifted", report.oracle->shifted},
                   {"error_estimate", report.oracle->canonical_error},
                   {"direct_gap", report.oracle->direct_gap}};
  } else {
    j["oracle"] = {{"error", report.oracle_error}};
  }
  json rows = json::array();
  for (const ReportRow& row : report.rows) {
    json r;
    r["method"] = row.method;
    if (!row.error.empty()) {
      r["error"] = row.error;
      rows.push_back(r);
      continue;
    }
    r["target"] = row.target;
    r["lower"] = json_value(row.lower);
    r["upper"] = json_value(row.upper);
    r["sum_lower"] = json_value(row.sum_lower);
    r["sum_upper"] = json_value(row.sum_upper);
    r["slack"] = json_value(row.slack);
    r["applicable"] = row.applicable;
    r["case"] = row.result.case_label;
    json diags = json::array();
    for (const Diagnostic& d : row.result.diagnostics) {
      diags.push_back({{"name", d.name}, {"required", d.required}, {"observed", d.observed}, {"satisfied", d.satisfied}});
    }
    r["diagnostics"] = diags;
    json alts = json::array();
    for (const Alternate& a : row.result.alternates) alts.push_back({{"name", a.name}, {"value", a.value}});
    r["alternates"] = alts;
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

}  // namespace young
