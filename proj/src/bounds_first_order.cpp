#include <algorithm>
#include <cmath>

#include "bounds_internal.hpp"

namespace young {

using detail::factorial;
using detail::ipow;

namespace {

TargetQuantity gap_target(const ProblemInstance& inst) {
  TargetQuantity t;
  t.tag = TargetTag::Gap;
  t.offset = inst.a() * inst.b();
  return t;
}

}  // namespace

BoundResult bound_endpoint_slope(const ProblemInstance& inst) {
  const Anchors& an = inst.anchors();
  const double d = an.d();
  BoundResult r;
  r.method = "endpoint-slope";
  r.target = gap_target(inst);
  const int dir = detail::sign_direction(inst, 2, r.diagnostics);
  r.applicable = dir != 0;

  const double s_a = inst.deriv(inst.a(), 1);
  const double s_b = inst.deriv(an.h_inv_b, 1);
  const double m = std::min(s_a, s_b);
  const double M = std::max(s_a, s_b);
  const double weight = ipow(d, 2) / factorial(2);
  r.lower = m * weight;
  r.upper = M * weight;
  r.case_label = "m, M at the anchor points";
  return r;
}

BoundResult bound_hh_cebysev(const ProblemInstance& inst) {
  const Anchors& an = inst.anchors();
  const double a = inst.a();
  const double b = inst.b();
  const double xb = an.h_inv_b;
  const double d = an.d();
  BoundResult r;
  r.method = "hh-cebysev";
  r.target = gap_target(inst);
  const int dir = detail::sign_direction(inst, 2, r.diagnostics);
  r.applicable = dir != 0;
  const bool increasing = dir >= 0;

  const double base_lower = d * (inst.eval_h(0.5 * (a + xb)) - b);
  const double base_upper = 0.5 * d * (an.h_a - b);
  const bool b_below = d >= 0.0;  // b <= h(a)
  const bool reversed = increasing != b_below;
  if (reversed) {
    r.lower = base_upper;
    r.upper = base_lower;
  } else {
    r.lower = base_lower;
    r.upper = base_upper;
  }
  r.case_label = std::string(increasing ? "h' increasing" : "h' decreasing") + (b_below ? ", b < h(a)" : ", b > h(a)") +
                 (reversed ? ", reversed" : "");
  detail::normalize(r);
  return r;
}

BoundResult bound_jensen_first(const ProblemInstance& inst) {
  const Anchors& an = inst.anchors();
  const double a = inst.a();
  const double xb = an.h_inv_b;
  const double d = an.d();
  BoundResult r;
  r.method = "jensen-first";
  r.target = gap_target(inst);
  const int dir = detail::sign_direction(inst, 3, r.diagnostics);
  r.applicable = dir != 0;
  const bool convex = dir >= 0;

  const double lower = d * d / 2.0 * inst.deriv((a + 2.0 * xb) / 3.0, 1);
  const double upper = d * d / 3.0 * (inst.deriv(a, 1) / 2.0 + inst.deriv(xb, 1));
  r.lower = convex ? lower : upper;
  r.upper = convex ? upper : lower;
  r.case_label = convex ? "h' convex" : "h' concave, reversed";
  detail::normalize(r);
  return r;
}

BoundResult bound_holder_norm(const ProblemInstance& inst, ExponentPair lower, ExponentPair upper) {
  return detail::holder_bound(inst, 0, lower, upper, "holder-norm");
}

}  // namespace young
