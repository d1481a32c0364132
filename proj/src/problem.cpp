#include "young/problem.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "json.hpp"
#include "young/jet.hpp"

namespace young {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

nlohmann::json exponent_json(double r) {
  if (r == kInf) return "inf";
  if (r == -kInf) return "-inf";
  return r;
}

double find_upper_bracket(const Expr& h, double a, double b) {
  double hi = std::max(a, 1.0);
  for (int i = 0; i < 64; ++i) {
    double v;
    try {
      v = eval(h, hi);
    } catch (const DomainError& e) {
      throw ValidationError("b", std::string("no x with h(x) = b before h leaves its domain (") + e.what() + ")");
    }
    if (v >= b) return hi;
    hi *= 2.0;
  }
  throw ValidationError("b", "h never reaches b");
}

}  // namespace

double ProblemInstance::deriv(double x, int k) const { return derivative(h_, x, k); }

RealFn ProblemInstance::deriv_fn(int k) const {
  Expr h = h_;
  return [h, k](double x) { return derivative(h, x, k); };
}

Anchors compute_anchors(const Expr& h, double a, double b, double c) {
  Anchors out;
  if (b == 0.0) {
    out.h_inv_b = 0.0;
  } else {
    out.h_inv_b = invert([&](double x) { return eval(h, x); }, b, 0.0, c, 1e-12,
                         [&](double x) { return derivative(h, x, 1); });
  }
  out.alpha = std::min(a, out.h_inv_b);
  out.beta = std::max(a, out.h_inv_b);
  out.h_a = a == 0.0 ? 0.0 : eval(h, a);
  if (a > out.h_inv_b) {
    out.orientation = Orientation::AAboveInverse;
  } else if (a < out.h_inv_b) {
    out.orientation = Orientation::ABelowInverse;
  } else {
    out.orientation = Orientation::Equal;
  }
  return out;
}

Anchors anchors(const ProblemInstance& inst) { return inst.anchors(); }

ProblemInstance ProblemInstance::create(Expr h, double a, double b, std::optional<double> c,
                                        ProblemOptions options) {
  if (!std::isfinite(a)) throw ValidationError("a", "must be finite");
  if (!std::isfinite(b)) throw ValidationError("b", "must be finite");
  if (a < 0.0) throw ValidationError("a", "must be nonnegative");
  if (b < 0.0) throw ValidationError("b", "must be nonnegative");
  if (!(options.quad_rel_tol >= 1e-14)) throw ValidationError("options.quad_rel_tol", "must be at least 1e-14");
  if (options.taylor_order < 0 || options.taylor_order > kDefaultOrderCap - 3) {
    throw ValidationError("options.taylor_order", "must lie in [0, " + std::to_string(kDefaultOrderCap - 3) + "]");
  }
  if (options.t_grid < 1) throw ValidationError("options.t_grid", "must be positive");

  // h(0) = 0, directly or as a one-sided limit when 0 is off the domain.
  bool at_zero = true;
  try {
    const double v = eval(h, 0.0);
    if (std::fabs(v) > 1e-12) throw ValidationError("function", "h(0) = " + std::to_string(v) + " is not 0");
  } catch (const DomainError&) {
    at_zero = false;
  }
  if (!at_zero) {
    for (double x : {1e-6, 1e-8, 1e-10}) {
      double v;
      try {
        v = eval(h, x);
      } catch (const DomainError& e) {
        throw ValidationError("function", std::string("not defined near 0 (") + e.what() + ")");
      }
      if (x == 1e-10 && std::fabs(v) > 1e-8) {
        throw ValidationError("function", "h(0+) = " + std::to_string(v) + " is not 0");
      }
    }
  }

  double c_value;
  if (c) {
    c_value = *c;
    if (!std::isfinite(c_value) || c_value <= 0.0) throw ValidationError("c", "must be positive and finite");
    if (a > c_value) throw ValidationError("a", "must not exceed c");
  } else {
    const double hi = find_upper_bracket(h, a, b);
    double xb = 0.0;
    if (b > 0.0) {
      try {
        xb = invert([&](double x) { return eval(h, x); }, b, 0.0, hi, 1e-12,
                    [&](double x) { return derivative(h, x, 1); });
      } catch (const Error& e) {
        throw ValidationError("b", std::string("cannot invert h at b (") + e.what() + ")");
      }
    }
    c_value = std::max(a, xb);
    if (c_value <= 0.0) throw ValidationError("c", "a = b = 0 leaves no interval");
  }

  double h_c;
  try {
    h_c = eval(h, c_value);
  } catch (const DomainError& e) {
    throw ValidationError("c", std::string("h(c) undefined (") + e.what() + ")");
  }
  if (b > h_c + 4.0 * kEps * std::max(1.0, std::fabs(h_c))) throw ValidationError("b", "must not exceed h(c)");

  // Strict monotonicity: h' > 0 inside, >= 0 at (guarded) endpoints.
  const int scan = 257;
  for (int i = 0; i < scan; ++i) {
    const bool endpoint = i == 0 || i == scan - 1;
    double x = c_value * i / (scan - 1);
    double slope;
    try {
      slope = derivative(h, x, 1);
    } catch (const DomainError&) {
      if (!endpoint) throw ValidationError("function", "h' undefined at x = " + std::to_string(x));
      x = i == 0 ? 1e-9 * c_value : c_value * (1.0 - 1e-9);
      try {
        slope = derivative(h, x, 1);
      } catch (const DomainError& e) {
        throw ValidationError("function", std::string("h' undefined near an endpoint (") + e.what() + ")");
      }
    }
    if (!(endpoint ? slope >= 0.0 : slope > 0.0)) {
      throw ValidationError("function", "h is not strictly increasing on [0, c] (h'(" + std::to_string(x) +
                                            ") = " + std::to_string(slope) + ")");
    }
  }

  ProblemInstance inst;
  inst.h_ = std::move(h);
  inst.a_ = a;
  inst.b_ = b;
  inst.c_ = c_value;
  inst.options_ = std::move(options);
  try {
    inst.anchors_ = compute_anchors(inst.h_, a, b, c_value);
  } catch (const NotBracketed& e) {
    throw ValidationError("b", e.what());
  }
  return inst;
}

std::string ProblemInstance::to_json() const {
  nlohmann::json opts{
      {"quad_rel_tol", options_.quad_rel_tol},
      {"taylor_order", options_.taylor_order},
      {"t_grid", options_.t_grid},
      {"holder_lower", {exponent_json(options_.holder_lower.first), exponent_json(options_.holder_lower.second)}},
      {"holder_upper", {exponent_json(options_.holder_upper.first), exponent_json(options_.holder_upper.second)}},
      {"lp_p", exponent_json(options_.lp_p)},
      {"integrand_offset", options_.integrand_offset},
      {"reflect", options_.reflect},
  };
  if (options_.t) opts["t"] = *options_.t;
  if (!options_.assume.empty()) opts["assume"] = options_.assume;
  if (options_.polya_lower) opts["polya_lower"] = *options_.polya_lower;
  if (options_.polya_upper) opts["polya_upper"] = *options_.polya_upper;
  nlohmann::json j{{"function", h_.source()}, {"a", a_}, {"b", b_}, {"c", c_}, {"options", opts}};
  return j.dump();
}

OracleDetails oracle_details(const ProblemInstance& inst) {
  const Anchors& an = inst.anchors();
  const double a = inst.a();
  const double b = inst.b();
  const double xb = an.h_inv_b;
  const RealFn h = [&](double x) { return inst.eval_h(x); };

  OracleDetails out;
  const QuadratureResult shifted = integrate(h, xb, a, inst.options().quad_rel_tol);
  out.shifted = shifted.value;
  out.canonical_error = shifted.abs_error_estimate;
  out.gap = shifted.value - b * (a - xb);
  out.sum = shifted.value + b * xb;

  // Independent path: both integrals from 0, inverse by pointwise inversion.
  const double reduced = 1e-8;
  const QuadratureResult first = integrate(h, 0.0, a, reduced);
  const RealFn slope = inst.deriv_fn(1);
  const QuadratureResult second = integrate(
      [&](double y) { return invert(h, y, 0.0, inst.c(), reduced, slope); }, 0.0, b, reduced);
  out.direct_gap = first.value + second.value - a * b;
  out.direct_error = first.abs_error_estimate + second.abs_error_estimate;

  const double roundoff = 64.0 * kEps * (std::fabs(first.value) + std::fabs(second.value) + a * b);
  const double allowed = 20.0 * (out.canonical_error + out.direct_error) + roundoff;
  if (std::fabs(out.gap - out.direct_gap) > allowed) {
    throw ConsistencyError("oracle paths disagree: " + std::to_string(out.gap) + " vs " +
                           std::to_string(out.direct_gap) + " (allowed " + std::to_string(allowed) + ")");
  }
  if (out.gap < -std::max(1e-10, allowed)) {
    throw ConsistencyError("negative Young gap " + std::to_string(out.gap));
  }
  return out;
}

double oracle_gap(const ProblemInstance& inst) { return oracle_details(inst).gap; }

double oracle_sum(const ProblemInstance& inst) { return oracle_details(inst).sum; }

}  // namespace young
