#include "young/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

namespace young {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod 15 abscissae on [-1, 1] (non-negative half) and weights; the odd
// entries carry the embedded Gauss 7 rule.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  double abs_value;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const RealFn& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  double abs_sum = std::fabs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  const double value = kronrod * half;
  const double error = std::fabs((kronrod - gauss) * half);
  if (!std::isfinite(value)) throw DomainError("integrand is not finite on the interval");
  return {lo, hi, value, error, abs_sum * std::fabs(half)};
}

}  // namespace

QuadratureResult integrate(const RealFn& f, double lo, double hi, const QuadratureOptions& opts) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("integration limits must be finite");
  if (lo == hi) return {};
  if (hi < lo) {
    QuadratureResult r = integrate(f, hi, lo, opts);
    r.value = -r.value;
    return r;
  }

  std::priority_queue<Segment> work;
  std::vector<Segment> settled;
  Segment first = gauss_kronrod(f, lo, hi);
  std::size_t evaluations = 15;
  long double total = first.value;
  long double total_err = first.error;
  long double total_abs = first.abs_value;
  // Error held by segments too narrow to split; refinement cannot reduce it.
  long double settled_err = 0.0L;
  work.push(first);

  auto tolerance = [&] {
    return std::max({opts.rel_tol * std::fabs(static_cast<double>(total)), opts.abs_tol,
                     50.0 * kEps * static_cast<double>(total_abs)});
  };

  while (!work.empty() && static_cast<double>(total_err - settled_err) > tolerance()) {
    Segment worst = work.top();
    work.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const double min_width = 64.0 * kEps * std::max(std::fabs(worst.lo), std::fabs(worst.hi));
    if (worst.hi - worst.lo <= min_width || !(worst.lo < mid && mid < worst.hi)) {
      // Cannot split further; keep its contribution as is.
      settled.push_back(worst);
      settled_err += worst.error;
      continue;
    }
    if (evaluations + 30 > opts.max_evaluations) {
      throw NoConvergence("quadrature budget of " + std::to_string(opts.max_evaluations) +
                          " evaluations exhausted (error estimate " +
                          std::to_string(static_cast<double>(total_err)) + ")");
    }
    Segment left = gauss_kronrod(f, worst.lo, mid);
    Segment right = gauss_kronrod(f, mid, worst.hi);
    evaluations += 30;
    total += static_cast<long double>(left.value) + right.value - worst.value;
    total_err += static_cast<long double>(left.error) + right.error - worst.error;
    total_abs += static_cast<long double>(left.abs_value) + right.abs_value - worst.abs_value;
    work.push(left);
    work.push(right);
  }

  // Re-sum from the segments to shed drift in the running totals.
  long double value = 0.0L;
  long double error = 0.0L;
  for (const Segment& s : settled) {
    value += s.value;
    error += s.error;
  }
  while (!work.empty()) {
    value += work.top().value;
    error += work.top().error;
    work.pop();
  }
  return {static_cast<double>(value), static_cast<double>(error), evaluations};
}

QuadratureResult integrate(const RealFn& f, double lo, double hi, double rel_tol) {
  QuadratureOptions opts;
  opts.rel_tol = rel_tol;
  return integrate(f, lo, hi, opts);
}

double eval_guarded(const RealFn& f, double x, double toward, double eps) {
  try {
    return f(x);
  } catch (const DomainError&) {
    const double moved = x + (toward > x ? eps : -eps);
    return f(moved);
  }
}

double invert(const RealFn& h, double y, double lo, double hi, double rel_tol, const RealFn& slope) {
  if (hi < lo) std::swap(lo, hi);
  const double tol = rel_tol * std::max(1.0, std::fabs(y));
  const double guard = 1e-9 * (hi - lo);
  const double f_lo = eval_guarded(h, lo, hi, guard) - y;
  const double f_hi = eval_guarded(h, hi, lo, guard) - y;
  if (f_lo > tol || f_hi < -tol) {
    throw NotBracketed("value " + std::to_string(y) + " outside [h(" + std::to_string(lo) + "), h(" +
                       std::to_string(hi) + ")]");
  }
  if (f_lo >= 0.0) return lo;
  if (f_hi <= 0.0) return hi;

  double a = lo;
  double b = hi;
  double x = 0.5 * (lo + hi);
  double best_x = x;
  double best_f = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 200; ++iter) {
    double fx;
    try {
      fx = h(x) - y;
    } catch (const DomainError&) {
      // Only possible at the very edge of the domain; step toward the middle.
      x = 0.5 * (a + b);
      fx = h(x) - y;
    }
    if (std::fabs(fx) < std::fabs(best_f)) {
      best_f = fx;
      best_x = x;
    }
    if (fx == 0.0) return x;
    if (fx < 0.0) {
      a = x;
    } else {
      b = x;
    }
    if (b - a <= 2.0 * kEps * std::max(std::fabs(a), std::fabs(b))) break;

    double next = 0.5 * (a + b);
    if (slope) {
      double s = 0.0;
      try {
        s = slope(x);
      } catch (const DomainError&) {
        s = 0.0;
      }
      if (s > 0.0 && std::isfinite(s)) {
        const double newton = x - fx / s;
        if (newton > a && newton < b) {
          if (std::fabs(newton - x) <= 2.0 * kEps * std::fabs(x) && std::fabs(fx) <= tol) {
            return newton;
          }
          next = newton;
        }
      }
    }
    x = next;
  }
  if (std::fabs(best_f) <= tol) return best_x;
  throw NoConvergence("inversion did not converge within 200 iterations (residual " +
                      std::to_string(best_f) + ")");
}

Extremum extremum(const RealFn& f, double lo, double hi, ExtremumKind kind, int scan_points) {
  if (hi < lo) throw DomainError("extremum interval is reversed");
  const double sign = kind == ExtremumKind::Max ? 1.0 : -1.0;
  if (lo == hi) return {lo, f(lo)};
  scan_points = std::max(scan_points, 3);
  const double eps = 1e-9 * (hi - lo);
  const double step = (hi - lo) / (scan_points - 1);

  std::vector<double> xs(scan_points);
  std::vector<double> vs(scan_points, std::numeric_limits<double>::quiet_NaN());
  int evaluable = 0;
  int best = -1;
  for (int i = 0; i < scan_points; ++i) {
    double x = i == scan_points - 1 ? hi : lo + step * i;
    double v = std::numeric_limits<double>::quiet_NaN();
    try {
      v = f(x);
    } catch (const DomainError&) {
      if (i == 0 || i == scan_points - 1) {
        x = i == 0 ? lo + eps : hi - eps;
        try {
          v = f(x);
        } catch (const DomainError&) {
        }
      }
    }
    xs[i] = x;
    if (!std::isfinite(v)) continue;
    vs[i] = v;
    ++evaluable;
    if (best < 0 || sign * v > sign * vs[best]) best = i;
  }
  if (evaluable < 2) throw DomainError("fewer than 2 evaluable points in extremum scan");

  // Golden-section search on the bracket around the best scan point.
  double a = xs[std::max(best - 1, 0)];
  double b = xs[std::min(best + 1, scan_points - 1)];
  Extremum out{xs[best], vs[best]};
  auto g = [&](double x) {
    try {
      const double v = f(x);
      return std::isfinite(v) ? sign * v : -std::numeric_limits<double>::infinity();
    } catch (const DomainError&) {
      return -std::numeric_limits<double>::infinity();
    }
  };
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - ratio * (b - a);
  double x2 = a + ratio * (b - a);
  double g1 = g(x1);
  double g2 = g(x2);
  for (int iter = 0; iter < 200 && b - a > 4.0 * kEps * std::max(1.0, std::fabs(a)); ++iter) {
    if (g1 >= g2) {
      b = x2;
      x2 = x1;
      g2 = g1;
      x1 = b - ratio * (b - a);
      g1 = g(x1);
    } else {
      a = x1;
      x1 = x2;
      g1 = g2;
      x2 = a + ratio * (b - a);
      g2 = g(x2);
    }
  }
  const double xm = g1 >= g2 ? x1 : x2;
  const double gm = std::max(g1, g2);
  if (std::isfinite(gm) && gm > sign * out.value) out = {xm, sign * gm};
  return out;
}

double norm_r(const RealFn& f, const NormSpec& spec, double rel_tol) {
  const double r = spec.r;
  if (r == 0.0 || std::isnan(r)) throw DomainError("norm exponent r = 0 is not allowed");
  if (spec.hi < spec.lo) throw DomainError("norm interval is reversed");
  if (r == kInf) return extremum(f, spec.lo, spec.hi, ExtremumKind::Max).value;
  if (r == -kInf) return extremum(f, spec.lo, spec.hi, ExtremumKind::Min).value;

  const bool integral = std::floor(r) == r;
  if (spec.lo == spec.hi) {
    if (r > 0) return 0.0;
    return kInf;
  }
  // Sign guard before integrating f^r.
  const double eps = 1e-9 * (spec.hi - spec.lo);
  for (int i = 0; i <= 256; ++i) {
    const double x = spec.lo + (spec.hi - spec.lo) * i / 256.0;
    double v;
    try {
      v = f(x);
    } catch (const DomainError&) {
      v = eval_guarded(f, x, i == 0 ? spec.hi : spec.lo, eps);
    }
    if (r < 0 && !(v > 0.0)) throw DomainError("f must be positive for a negative norm exponent");
    if (!integral && v < 0.0) throw DomainError("f must be nonnegative for a fractional norm exponent");
  }
  const auto q = integrate([&](double x) { return std::pow(f(x), r); }, spec.lo, spec.hi, rel_tol);
  if (q.value < 0.0 && std::floor(1.0 / r) != 1.0 / r) {
    throw DomainError("integral of f^r is negative; its 1/r power is not real");
  }
  return std::pow(q.value, 1.0 / r);
}

}  // namespace young
