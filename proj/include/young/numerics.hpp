#pragma once

#include <cstddef>
#include <functional>
#include <limits>

#include "young/errors.hpp"

namespace young {

using RealFn = std::function<double(double)>;

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
};

struct QuadratureOptions {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  std::size_t max_evaluations = 1'000'000;
};

/// Signed integral over [lo, hi] (hi < lo allowed). Adaptive Gauss-Kronrod
/// 7/15; the nodes never touch the endpoints.
QuadratureResult integrate(const RealFn& f, double lo, double hi, const QuadratureOptions& opts);
QuadratureResult integrate(const RealFn& f, double lo, double hi, double rel_tol = 1e-12);

/// Solves h(x) = y on [lo, hi] for increasing h. `slope` (optional) is h'
/// and enables Newton steps.
double invert(const RealFn& h, double y, double lo, double hi, double rel_tol = 1e-12,
              const RealFn& slope = nullptr);

enum class ExtremumKind { Min, Max };

struct Extremum {
  double x = 0.0;
  double value = 0.0;
};

Extremum extremum(const RealFn& f, double lo, double hi, ExtremumKind kind, int scan_points = 1025);

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct NormSpec {
  double r = 1.0;  // may be +-inf; 0 is rejected
  double lo = 0.0;
  double hi = 0.0;
};

/// Unnormalized L^r "norm" [int f^r]^(1/r); sup / inf for r = +-inf.
double norm_r(const RealFn& f, const NormSpec& spec, double rel_tol = 1e-12);

/// Evaluates f, moving an endpoint that raises DomainError inward by eps.
double eval_guarded(const RealFn& f, double x, double toward, double eps);

}  // namespace young
