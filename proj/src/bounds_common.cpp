#include <algorithm>
#include <cmath>
#include <cstdio>

#include "bounds_internal.hpp"
#include "young/jet.hpp"

namespace young {

double TargetQuantity::from_sum(double sum) const {
  if (tag == TargetTag::AbsRemainder) return std::fabs(sum - offset);
  return sum - offset;
}

std::string TargetQuantity::label() const {
  switch (tag) {
    case TargetTag::Gap:
      return "GAP";
    case TargetTag::Sum:
      return "SUM";
    case TargetTag::Shifted:
      return "SHIFTED";
    case TargetTag::Remainder:
      return "REMAINDER(" + std::to_string(n) + ")";
    case TargetTag::AbsRemainder:
      return "ABS_REMAINDER(" + std::to_string(n) + ")";
    case TargetTag::SecondDerivMiddle:
      return "SECOND_DERIV_MIDDLE";
  }
  return "?";
}

std::optional<double> BoundResult::sum_lower() const {
  if (target.tag == TargetTag::AbsRemainder) {
    if (!upper) return std::nullopt;
    return target.offset - *upper;
  }
  if (!lower) return std::nullopt;
  return target.to_sum(*lower);
}

std::optional<double> BoundResult::sum_upper() const {
  if (!upper) return std::nullopt;
  if (target.tag == TargetTag::AbsRemainder) return target.offset + *upper;
  return target.to_sum(*upper);
}

double oracle_target(const TargetQuantity& target, double oracle_sum) { return target.from_sum(oracle_sum); }

SnPolynomial::SnPolynomial(int n, std::vector<double> derivs, double w)
    : n_(n), derivs_(std::move(derivs)), w_(w) {
  if (n_ < 1) throw DomainError("S_n needs n >= 1");
  if (static_cast<int>(derivs_.size()) < n_ - 1) throw DomainError("S_n needs h^(0..n-2)");
}

double SnPolynomial::partial(int i, double u) const {
  if (i > n_) return 0.0;
  double sum = 0.0;
  for (int k = std::max(i, 1); k <= n_ - 1; ++k) {
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    sum += sign / detail::factorial(k - i) * detail::ipow(u, k - i) * derivs_[k - 1];
  }
  const double sign_n = n_ % 2 == 0 ? 1.0 : -1.0;
  sum += sign_n * w_ / detail::factorial(n_ - i) * detail::ipow(u, n_ - i);
  return sum;
}

double taylor_sum(const ProblemInstance& inst, int n) {
  if (n <= 0) return 0.0;
  const Anchors& an = inst.anchors();
  const double d = an.d();
  const TaylorJet j = jet(inst.h(), an.h_inv_b, n);
  double sum = 0.0;
  for (int k = 1; k <= n; ++k) sum += j.derivs[k] * (detail::ipow(d, k + 1) / detail::factorial(k + 1));
  return sum;
}

namespace detail {

double ipow(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

double factorial(int k) {
  long double f = 1.0L;
  for (int i = 2; i <= k; ++i) f *= i;
  return static_cast<double>(f);
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

SignSample sample_sign(const ProblemInstance& inst, int k) {
  const Anchors& an = inst.anchors();
  const int points = an.alpha == an.beta ? 1 : 257;
  const double eps = 1e-9 * (an.beta - an.alpha);
  std::vector<double> values;
  values.reserve(points);
  SignSample out;
  for (int i = 0; i < points; ++i) {
    const double x = points == 1 ? an.alpha : an.alpha + (an.beta - an.alpha) * i / (points - 1);
    try {
      values.push_back(inst.deriv(x, k));
    } catch (const DomainError&) {
      const bool endpoint = i == 0 || i == points - 1;
      if (!endpoint || points == 1) {
        out.defined = false;
        continue;
      }
      try {
        values.push_back(inst.deriv(i == 0 ? x + eps : x - eps, k));
      } catch (const DomainError&) {
        out.defined = false;
      }
    }
  }
  if (values.empty()) {
    out.defined = false;
    out.nonneg = out.nonpos = false;
    return out;
  }
  out.min = *std::min_element(values.begin(), values.end());
  out.max = *std::max_element(values.begin(), values.end());
  const double scale = std::max(std::fabs(out.min), std::fabs(out.max));
  const double tol = 1e-10 * scale;
  out.nonneg = out.min >= -tol;
  out.nonpos = out.max <= tol;
  if (!out.defined) out.nonneg = out.nonpos = false;
  return out;
}

namespace {

std::string sign_name(int k, int want) { return "h(" + std::to_string(k) + ")" + (want > 0 ? ">=0" : "<=0"); }

bool assumed(const ProblemInstance& inst, const std::string& name) {
  const auto& list = inst.options().assume;
  return std::find(list.begin(), list.end(), name) != list.end();
}

std::string observed_range(const SignSample& s) {
  if (!s.defined) return "undefined at some sample";
  return "range [" + format_number(s.min) + ", " + format_number(s.max) + "]";
}

}  // namespace

Diagnostic require_sign(const ProblemInstance& inst, int k, int want) {
  Diagnostic diag;
  diag.name = sign_name(k, want);
  diag.required = diag.name + " on [alpha, beta]";
  if (assumed(inst, diag.name)) {
    diag.observed = "assumed";
    diag.satisfied = true;
    return diag;
  }
  const SignSample s = sample_sign(inst, k);
  diag.observed = observed_range(s);
  diag.satisfied = want > 0 ? s.nonneg : s.nonpos;
  return diag;
}

int sign_direction(const ProblemInstance& inst, int k, std::vector<Diagnostic>& diags) {
  Diagnostic diag;
  diag.name = "h(" + std::to_string(k) + ") sign-definite";
  diag.required = "h(" + std::to_string(k) + ") of one sign on [alpha, beta]";
  int direction = 0;
  if (assumed(inst, sign_name(k, +1))) {
    diag.observed = "assumed >= 0";
    direction = 1;
  } else if (assumed(inst, sign_name(k, -1))) {
    diag.observed = "assumed <= 0";
    direction = -1;
  } else {
    const SignSample s = sample_sign(inst, k);
    diag.observed = observed_range(s);
    if (s.nonneg) {
      direction = 1;
    } else if (s.nonpos) {
      direction = -1;
    }
  }
  diag.satisfied = direction != 0;
  diags.push_back(diag);
  return direction;
}

int remainder_sign(const ProblemInstance& inst, int n) {
  return inst.anchors().d() < 0.0 && n % 2 == 1 ? -1 : 1;
}

double holder_constant(double abs_d, double r, int n) {
  if (r == kInf) return ipow(abs_d, n + 1);
  if (r == -kInf) return 0.0;
  if (r == 0.0) throw ExponentDomain("exponent r = 0 is not allowed");
  const double e = r * (n + 1) + 1.0;
  if (!(e > 0.0)) {
    throw ExponentDomain("C_r undefined for r = " + format_number(r) + " at order " + std::to_string(n) +
                         " (needs r(n+1)+1 > 0)");
  }
  if (abs_d == 0.0) return 0.0;
  return std::pow(std::pow(abs_d, e) / e, 1.0 / r);
}

void normalize(BoundResult& result) {
  if (result.lower && result.upper && *result.lower > *result.upper) {
    std::swap(*result.lower, *result.upper);
    result.diagnostics.push_back({"ordering", "lower <= upper", "swapped", true});
  }
}

TargetQuantity remainder_target(const ProblemInstance& inst, int n) {
  TargetQuantity t;
  t.n = n;
  t.tag = n == 0 ? TargetTag::Gap : TargetTag::Remainder;
  t.offset = inst.a() * inst.b() + taylor_sum(inst, n);
  return t;
}

}  // namespace detail

}  // namespace young
