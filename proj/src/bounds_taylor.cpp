#include <algorithm>
#include <cmath>

#include "bounds_internal.hpp"

namespace young {

using detail::factorial;
using detail::ipow;

namespace {

bool conjugate(ExponentPair pair) {
  if (pair.first == 0.0 || pair.second == 0.0) return false;
  return std::fabs(1.0 / pair.first + 1.0 / pair.second - 1.0) <= 1e-12;
}

std::string pair_text(ExponentPair pair) {
  return "(" + detail::format_number(pair.first) + ", " + detail::format_number(pair.second) + ")";
}

// Main diagnostic label for the sign/orientation case of a remainder bound.
std::string orientation_case(double d, int n) {
  if (d >= 0.0) return "b < h(a)";
  return n % 2 == 0 ? "b > h(a), n even" : "b > h(a), n odd";
}

}  // namespace

namespace detail {

BoundResult holder_bound(const ProblemInstance& inst, int n, ExponentPair lower, ExponentPair upper,
                         std::string method) {
  if (!conjugate(upper) || std::min(upper.first, upper.second) < 1.0) {
    throw ExponentDomain("upper exponent pair " + pair_text(upper) + " must satisfy 1/p + 1/q = 1 with p, q >= 1");
  }
  if (!conjugate(lower) || std::min(lower.first, lower.second) >= 1.0) {
    throw ExponentDomain("lower exponent pair " + pair_text(lower) +
                         " must satisfy 1/u + 1/v = 1 with u, v in (-inf, 0) or (0, 1)");
  }
  const Anchors& an = inst.anchors();
  const double abs_d = std::fabs(an.d());
  const double tol = inst.options().quad_rel_tol;
  const RealFn g = inst.deriv_fn(n + 1);
  const double fact = factorial(n + 1);

  BoundResult r;
  r.method = std::move(method);
  r.target = remainder_target(inst, n);
  r.diagnostics.push_back(require_sign(inst, n + 1, +1));
  r.applicable = r.diagnostics.back().satisfied;

  auto side = [&](double c_exp, double norm_exp) {
    const double c = holder_constant(abs_d, c_exp, n);
    if (c == 0.0) return 0.0;
    return c * norm_r(g, {norm_exp, an.alpha, an.beta}, tol) / fact;
  };

  double up = side(upper.first, upper.second);
  std::optional<double> lo;
  try {
    lo = side(lower.first, lower.second);
  } catch (const DomainError& e) {
    r.diagnostics.push_back({"lower norm", "norm of h(" + std::to_string(n + 1) + ") real", e.what(), false});
    r.applicable = false;
  }

  // The conjugate roles can be exchanged; report the other pairing too.
  std::optional<double> up_alt;
  std::optional<double> lo_alt;
  try {
    up_alt = side(upper.second, upper.first);
  } catch (const Error&) {
  }
  try {
    lo_alt = side(lower.second, lower.first);
  } catch (const Error&) {
  }

  const int sigma = remainder_sign(inst, n);
  if (sigma < 0) {
    r.lower = -up;
    if (lo) r.upper = -*lo;
    if (up_alt) r.alternates.push_back({"lower, exchanged pairing", -*up_alt});
    if (lo_alt) r.alternates.push_back({"upper, exchanged pairing", -*lo_alt});
  } else {
    r.upper = up;
    r.lower = lo;
    if (up_alt) r.alternates.push_back({"upper, exchanged pairing", *up_alt});
    if (lo_alt) r.alternates.push_back({"lower, exchanged pairing", *lo_alt});
  }
  r.case_label = orientation_case(an.d(), n) + ", lower " + pair_text(lower) + ", upper " + pair_text(upper);
  normalize(r);
  return r;
}

}  // namespace detail

BoundResult bound_taylor_lagrange(const ProblemInstance& inst, int n) {
  const Anchors& an = inst.anchors();
  const double d = an.d();
  BoundResult r;
  r.method = "taylor-lagrange(" + std::to_string(n) + ")";
  r.target = detail::remainder_target(inst, n);
  const int dir = detail::sign_direction(inst, n + 2, r.diagnostics);
  r.applicable = dir != 0;

  const double g_a = inst.deriv(inst.a(), n + 1);
  const double g_b = inst.deriv(an.h_inv_b, n + 1);
  const double m = std::min(g_a, g_b);
  const double M = std::max(g_a, g_b);
  const double weight = ipow(d, n + 2) / factorial(n + 2);
  // weight < 0 only for d < 0 with n odd; the roles of m and M then swap.
  r.lower = std::min(m * weight, M * weight);
  r.upper = std::max(m * weight, M * weight);
  r.case_label = orientation_case(d, n);
  if (d < 0.0 && n % 2 == 1) {
    r.alternates.push_back({"lower as typeset (-M)", -M * weight});
    r.alternates.push_back({"upper as typeset (-m)", -m * weight});
  }
  return r;
}

BoundResult bound_taylor_holder(const ProblemInstance& inst, int n, ExponentPair lower, ExponentPair upper) {
  return detail::holder_bound(inst, n, lower, upper, "taylor-holder(" + std::to_string(n) + ")");
}

BoundResult bound_taylor_cebysev(const ProblemInstance& inst, int n) {
  const Anchors& an = inst.anchors();
  const double d = an.d();
  BoundResult r;
  r.method = "taylor-cebysev(" + std::to_string(n) + ")";
  r.target = detail::remainder_target(inst, n);
  const int dir = detail::sign_direction(inst, n + 2, r.diagnostics);
  r.applicable = dir != 0;
  const bool increasing = dir >= 0;
  const bool odd = n % 2 == 1;

  const double delta =
      n == 0 ? an.h_a - inst.b() : inst.deriv(inst.a(), n) - inst.deriv(an.h_inv_b, n);
  const double value = ipow(d, n + 1) / factorial(n + 2) * delta;

  bool upper_side;
  if (d >= 0.0) {
    upper_side = increasing;
  } else {
    upper_side = increasing == odd;
  }
  if (upper_side) {
    r.upper = value;
  } else {
    r.lower = value;
  }
  r.case_label = (d >= 0.0 ? "h(a) > b" : "h(a) < b") + std::string(increasing ? ", increasing" : ", decreasing") +
                 (d >= 0.0 ? "" : (odd ? ", n odd" : ", n even")) + (upper_side ? " -> upper" : " -> lower");
  return r;
}

BoundResult bound_taylor_jensen(const ProblemInstance& inst, int n) {
  const Anchors& an = inst.anchors();
  const double a = inst.a();
  const double xb = an.h_inv_b;
  const double d = an.d();
  BoundResult r;
  r.method = "taylor-jensen(" + std::to_string(n) + ")";
  r.target = detail::remainder_target(inst, n);
  const int dir = detail::sign_direction(inst, n + 3, r.diagnostics);
  r.applicable = dir != 0;
  const bool convex = dir >= 0;

  const double centroid = (a + (n + 2) * xb) / (n + 3);
  const double g_c = inst.deriv(centroid, n + 1);
  const double power = ipow(d, n + 2);
  const double jensen = power / factorial(n + 2) * g_c;
  const double typeset = power / (n + 2) * g_c;
  const double chord = power * (inst.deriv(a, n + 1) + (n + 2) * inst.deriv(xb, n + 1)) / factorial(n + 3);

  const bool reversed_by_case = d < 0.0 && n % 2 == 1;
  const bool reversed = reversed_by_case != !convex;
  r.lower = reversed ? chord : jensen;
  r.upper = reversed ? jensen : chord;
  r.alternates.push_back({"jensen side as typeset, 1/(n+2)", typeset});
  r.case_label = orientation_case(d, n) + (convex ? ", convex" : ", concave") + (reversed ? ", reversed" : "");
  detail::normalize(r);
  return r;
}

BoundResult bound_taylor_product_hh(const ProblemInstance& inst, int n) {
  const Anchors& an = inst.anchors();
  const double a = inst.a();
  const double xb = an.h_inv_b;
  const double d = an.d();
  BoundResult r;
  r.method = "taylor-product-hh(" + std::to_string(n) + ")";
  r.target = detail::remainder_target(inst, n);
  r.diagnostics.push_back(detail::require_sign(inst, n + 1, +1));
  r.diagnostics.push_back(detail::require_sign(inst, n + 3, +1));
  r.applicable = r.diagnostics[0].satisfied && r.diagnostics[1].satisfied;

  const double f1 = inst.deriv(a, n + 1);
  const double f2 = inst.deriv(xb, n + 1);
  const double mid = inst.deriv(0.5 * (a + xb), n + 1);
  const double inner_lower = mid / ipow(2.0, n) - (2.0 * f1 + f2) / 6.0;
  const double inner_upper = (f1 + 2.0 * f2) / 6.0;
  // Signed d^{n+2}: negative exactly when the remainder is.
  const double weight = ipow(d, n + 2) / factorial(n + 1);
  const double x = weight * inner_lower;
  const double y = weight * inner_upper;
  r.lower = std::min(x, y);
  r.upper = std::max(x, y);
  r.case_label = orientation_case(d, n);
  if (d < 0.0 && n % 2 == 1) {
    const double positive = ipow(-d, n + 2) / factorial(n + 1);
    r.alternates.push_back({"lower as typeset", positive * inner_upper});
    r.alternates.push_back({"upper as typeset", positive * inner_lower});
  }
  return r;
}

}  // namespace young
