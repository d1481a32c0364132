#include <algorithm>
#include <cmath>

#include "bounds_internal.hpp"
#include "young/jet.hpp"

namespace young {

using detail::factorial;
using detail::format_number;
using detail::ipow;

namespace {

constexpr double kDegenerate = 1e-12;

TargetQuantity shifted_target(const ProblemInstance& inst) {
  TargetQuantity t;
  t.tag = TargetTag::Shifted;
  t.offset = inst.b() * inst.anchors().h_inv_b;
  return t;
}

struct Range {
  double lower;
  double upper;
};

// Sharp extrema of h^(k) over [alpha, beta].
Range derivative_range(const ProblemInstance& inst, int k) {
  const Anchors& an = inst.anchors();
  const RealFn g = inst.deriv_fn(k);
  return {extremum(g, an.alpha, an.beta, ExtremumKind::Min).value,
          extremum(g, an.alpha, an.beta, ExtremumKind::Max).value};
}

Diagnostic range_diagnostic(int k, Range used) {
  return {"L <= h(" + std::to_string(k) + ") <= U",
          "bounds on (alpha, beta)",
          "L = " + format_number(used.lower) + ", U = " + format_number(used.upper), true};
}

}  // namespace

BoundResult bound_polya_first(const ProblemInstance& inst) {
  const Anchors& an = inst.anchors();
  const double b = inst.b();
  const double h_a = an.h_a;
  const double d = an.d();
  BoundResult r;
  r.method = "polya-first";
  r.target = shifted_target(inst);

  Range sharp = derivative_range(inst, 1);
  Range used = sharp;
  const auto& opts = inst.options();
  if (opts.polya_lower) used.lower = *opts.polya_lower;
  if (opts.polya_upper) used.upper = *opts.polya_upper;
  Diagnostic diag = range_diagnostic(1, used);
  diag.satisfied = used.lower <= sharp.lower * (1 + 1e-12) + 1e-15 && used.upper >= sharp.upper * (1 - 1e-12) - 1e-15;
  if (!diag.satisfied) {
    diag.observed += " (h' spans [" + format_number(sharp.lower) + ", " + format_number(sharp.upper) + "])";
  }
  r.diagnostics.push_back(diag);
  r.applicable = diag.satisfied;

  const double L = used.lower;
  const double U = used.upper;
  if (U - L <= kDegenerate) {
    // h' constant: the integral is the trapezoid exactly.
    const double exact = d * (h_a + b) / 2.0;
    r.lower = exact;
    r.upper = exact;
    r.case_label = "degenerate range, linear value";
    return r;
  }
  const double jump = h_a - b;
  r.lower = (L * U * d * d - 2.0 * d * (L * h_a - U * b) + jump * jump) / (2.0 * (U - L));
  r.upper = -(L * U * d * d - 2.0 * d * (U * h_a - L * b) + jump * jump) / (2.0 * (U - L));
  r.case_label = "L, U from h'";
  detail::normalize(r);
  return r;
}

BoundResult bound_polya_second(const ProblemInstance& inst) {
  const Anchors& an = inst.anchors();
  const double a = inst.a();
  const double b = inst.b();
  const double xb = an.h_inv_b;
  const double h_a = an.h_a;
  const double d = an.d();
  const double s_a = inst.deriv(a, 1);
  const double s_b = inst.deriv(xb, 1);

  BoundResult r;
  r.method = "polya-second";
  r.target.tag = TargetTag::SecondDerivMiddle;
  r.target.offset = a * h_a - (a * a * s_a - xb * xb * s_b) / 2.0;

  const Range used = derivative_range(inst, 2);
  r.diagnostics.push_back(range_diagnostic(2, used));

  auto denominator = [&](double k) { return (xb - a) * k - s_b + s_a; };
  auto side = [&](double k) {
    const double num = b - h_a + a * s_a - xb * s_b + k * (xb * xb - a * a) / 2.0;
    return k * (a * a * a - xb * xb * xb) / 6.0 + num * num / (2.0 * denominator(k));
  };

  const double den_l = denominator(used.lower);
  const double den_u = denominator(used.upper);
  Diagnostic den_diag{"denominators", "|denominator| > 1e-12",
                      format_number(den_l) + ", " + format_number(den_u), true};
  double x;
  double y;
  if (std::fabs(den_l) <= kDegenerate || std::fabs(den_u) <= kDegenerate) {
    // Trapezoid rule with its second-derivative error term instead.
    den_diag.observed += " (trapezoid bracket used)";
    const double trapezoid = d * (h_a + b) / 2.0;
    const double to_middle = -a * h_a + b * xb + (a * a * s_a - xb * xb * s_b) / 2.0;
    const double cube = d * d * d / 12.0;
    x = trapezoid - used.lower * cube + to_middle;
    y = trapezoid - used.upper * cube + to_middle;
    r.case_label = "degenerate denominator, trapezoid bracket";
  } else {
    x = side(used.lower);
    y = side(used.upper);
    r.case_label = d >= 0.0 ? "a > h^{-1}(b)" : "a < h^{-1}(b), sides exchanged";
  }
  r.diagnostics.push_back(den_diag);
  r.lower = std::min(x, y);
  r.upper = std::max(x, y);
  return r;
}

BoundResult bound_polya_higher(const ProblemInstance& inst, int n, std::optional<double> t) {
  const Anchors& an = inst.anchors();
  const double a = inst.a();
  const double xb = an.h_inv_b;
  BoundResult r;
  r.method = "polya-higher(" + std::to_string(n) + ")";
  r.target = shifted_target(inst);

  if (t) {
    const bool inside = an.alpha == an.beta ? *t == an.alpha : (*t > an.alpha && *t < an.beta);
    if (!inside) {
      throw InvalidT("t = " + format_number(*t) + " is not strictly between a and h^{-1}(b)");
    }
    r.method = "polya-higher(" + std::to_string(n) + "," + format_number(*t) + ")";
  }

  const Range used = derivative_range(inst, n + 1);
  r.diagnostics.push_back(range_diagnostic(n + 1, used));

  const TaylorJet at_b = jet(inst.h(), xb, n);
  const TaylorJet at_a = jet(inst.h(), a, n);
  const int order = n + 2;
  auto bound_at = [&](double tt, double w_b, double w_a) {
    const SnPolynomial s_b(order, at_b.derivs, w_b);
    const SnPolynomial s_a(order, at_a.derivs, w_a);
    double sum = 0.0;
    for (int i = 0; i <= order; ++i) {
      const double sign = i % 2 == 0 ? 1.0 : -1.0;
      sum += sign / factorial(i) * (s_b.partial(i, xb) - s_a.partial(i, a)) * ipow(tt, i);
    }
    return sum;
  };

  const bool odd = n % 2 == 1;
  const double L = used.lower;
  const double U = used.upper;
  auto pair_at = [&](double tt) {
    const double x = odd ? bound_at(tt, L, L) : bound_at(tt, L, U);
    const double y = odd ? bound_at(tt, U, U) : bound_at(tt, U, L);
    return Range{std::min(x, y), std::max(x, y)};
  };

  std::vector<double> grid;
  if (t) {
    grid.push_back(*t);
  } else if (an.alpha == an.beta) {
    grid.push_back(an.alpha);
  } else {
    const int count = inst.options().t_grid;
    for (int j = 1; j <= count; ++j) grid.push_back(an.alpha + (an.beta - an.alpha) * j / (count + 1));
  }
  double best_lower = -kInf;
  double best_upper = kInf;
  double t_lower = grid.front();
  double t_upper = grid.front();
  for (double tt : grid) {
    const Range p = pair_at(tt);
    if (p.lower > best_lower) {
      best_lower = p.lower;
      t_lower = tt;
    }
    if (p.upper < best_upper) {
      best_upper = p.upper;
      t_upper = tt;
    }
  }
  r.lower = best_lower;
  r.upper = best_upper;
  r.alternates.push_back({"t at lower", t_lower});
  r.alternates.push_back({"t at upper", t_upper});
  r.case_label = std::string(odd ? "n odd, (L,L)/(U,U)" : "n even, (L,U)/(U,L)") +
                 (t ? ", fixed t" : ", t grid of " + std::to_string(grid.size()));
  detail::normalize(r);
  return r;
}

BoundResult bound_lp_remainder(const ProblemInstance& inst, int n, double p, std::optional<double> t) {
  const Anchors& an = inst.anchors();
  const double a = inst.a();
  const double xb = an.h_inv_b;
  const double d = an.d();
  if (!(p >= 1.0)) throw ExponentDomain("L^p remainder needs p >= 1, got " + format_number(p));
  BoundResult r;
  r.method = "lp-remainder(" + std::to_string(n) + "," + format_number(p) + ")";
  if (d < 0.0) {
    if (!inst.options().reflect) throw OrientationError("a < h^{-1}(b) and reflection is disabled");
    r.diagnostics.push_back({"orientation", "h^{-1}(b) <= a", "a < h^{-1}(b), reflected", true});
  }
  const double tt = t ? *t : 0.5 * (an.alpha + an.beta);
  if (tt < an.alpha || tt > an.beta) throw InvalidT("t = " + format_number(tt) + " is outside [alpha, beta]");

  const TaylorJet at_b = jet(inst.h(), xb, n);
  const TaylorJet at_a = jet(inst.h(), a, n);
  double center = 0.0;
  for (int i = 0; i <= n; ++i) {
    center += (at_b.derivs[i] * ipow(tt - xb, i + 1) - at_a.derivs[i] * ipow(tt - a, i + 1)) / factorial(i + 1);
  }

  const RealFn g = inst.deriv_fn(n + 1);
  const RealFn abs_g = [&](double x) { return std::fabs(g(x)); };
  const double left = tt - an.alpha;
  const double right = an.beta - tt;
  const double width = an.beta - an.alpha;
  const double tol = inst.options().quad_rel_tol;
  double tight;
  double coarse;
  if (p == kInf) {
    const double norm = norm_r(abs_g, {kInf, an.alpha, an.beta}, tol);
    tight = (ipow(left, n + 2) + ipow(right, n + 2)) / factorial(n + 2) * norm;
    coarse = 2.0 * ipow(width, n + 2) / factorial(n + 2) * norm;
  } else if (p == 1.0) {
    const double norm = norm_r(abs_g, {1.0, an.alpha, an.beta}, tol);
    tight = (ipow(left, n + 1) + ipow(right, n + 1)) / factorial(n + 1) * norm;
    coarse = 2.0 * ipow(width, n + 1) / factorial(n + 1) * norm;
  } else {
    const double q = p / (p - 1.0);
    const double e = n + 1 + 1.0 / q;
    const double norm = norm_r(abs_g, {p, an.alpha, an.beta}, tol);
    tight = (std::pow(left, e) + std::pow(right, e)) / (factorial(n + 1) * std::pow(n * q + q + 1.0, 1.0 / q)) * norm;
    coarse = 2.0 * std::pow(width, e) / factorial(n + 1) * norm;
    r.alternates.push_back({"coarse bound as typeset, power n+2", 2.0 * ipow(width, n + 2) / factorial(n + 1) * norm});
  }
  r.alternates.push_back({"coarse bound", coarse});

  r.target.tag = TargetTag::AbsRemainder;
  r.target.n = n;
  r.target.t = tt;
  r.target.offset = inst.b() * xb + center;
  r.upper = tight;
  r.case_label = "t = " + format_number(tt);
  return r;
}

}  // namespace young
