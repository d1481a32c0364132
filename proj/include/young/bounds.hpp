#pragma once

#include <optional>
#include <string>
#include <vector>

#include "young/problem.hpp"

namespace young {

enum class TargetTag { Gap, Sum, Shifted, Remainder, AbsRemainder, SecondDerivMiddle };

/// The quantity an estimator bounds. For every tag except AbsRemainder,
/// SUM = native + offset. For AbsRemainder the native value is
/// |SUM - offset|, so an upper bound B gives SUM in [offset - B, offset + B].
struct TargetQuantity {
  TargetTag tag = TargetTag::Gap;
  int n = 0;
  double offset = 0.0;
  std::optional<double> t;

  double to_sum(double native) const { return native + offset; }
  double from_sum(double sum) const;
  std::string label() const;
};

struct Diagnostic {
  std::string name;
  std::string required;
  std::string observed;
  bool satisfied = true;
};

/// Secondary values an estimator reports beside its main bounds.
struct Alternate {
  std::string name;
  double value = 0.0;
};

struct BoundResult {
  std::string method;
  TargetQuantity target;
  std::optional<double> lower;
  std::optional<double> upper;
  bool applicable = true;
  std::string case_label;
  std::vector<Diagnostic> diagnostics;
  std::vector<Alternate> alternates;

  std::optional<double> sum_lower() const;
  std::optional<double> sum_upper() const;
};

/// S_n(h; u, v, w) = sum_{k=1}^{n-1} (-1)^k/k! u^k h^(k-1)(v) + (-1)^n w/n! u^n.
class SnPolynomial {
 public:
  /// derivs[j] = h^(j)(v) for j = 0..n-2.
  SnPolynomial(int n, std::vector<double> derivs, double w);

  int n() const noexcept { return n_; }
  double value(double u) const { return partial(0, u); }
  /// i-th partial derivative in u.
  double partial(int i, double u) const;

 private:
  int n_;
  std::vector<double> derivs_;
  double w_;
};

BoundResult bound_endpoint_slope(const ProblemInstance& inst);
BoundResult bound_hh_cebysev(const ProblemInstance& inst);
BoundResult bound_jensen_first(const ProblemInstance& inst);
BoundResult bound_holder_norm(const ProblemInstance& inst, ExponentPair lower, ExponentPair upper);

BoundResult bound_taylor_lagrange(const ProblemInstance& inst, int n);
BoundResult bound_taylor_holder(const ProblemInstance& inst, int n, ExponentPair lower, ExponentPair upper);
BoundResult bound_taylor_cebysev(const ProblemInstance& inst, int n);
BoundResult bound_taylor_jensen(const ProblemInstance& inst, int n);
BoundResult bound_taylor_product_hh(const ProblemInstance& inst, int n);

BoundResult bound_polya_first(const ProblemInstance& inst);
BoundResult bound_polya_second(const ProblemInstance& inst);
BoundResult bound_polya_higher(const ProblemInstance& inst, int n, std::optional<double> t = std::nullopt);
BoundResult bound_lp_remainder(const ProblemInstance& inst, int n, double p, std::optional<double> t = std::nullopt);

/// Sum_{k=1}^n h^(k)(h^{-1}(b)) d^{k+1}/(k+1)! with d = a - h^{-1}(b).
double taylor_sum(const ProblemInstance& inst, int n);

/// Value of the target computed from the oracle sum.
double oracle_target(const TargetQuantity& target, double oracle_sum);

// Catalog ------------------------------------------------------------------

enum class MethodKind {
  EndpointSlope,
  HhCebysev,
  JensenFirst,
  HolderNorm,
  TaylorLagrange,
  TaylorHolder,
  TaylorCebysev,
  TaylorJensen,
  TaylorProductHh,
  PolyaFirst,
  PolyaSecond,
  PolyaHigher,
  LpRemainder,
};

struct MethodSpec {
  MethodKind kind = MethodKind::EndpointSlope;
  int n = 0;
  std::optional<double> t;
  std::optional<double> p;
  std::string name() const;
};

/// Parses "taylor-jensen(1)", "polya-higher(2,1.25)", "lp-remainder(1,inf)".
/// A missing order falls back to `default_order`. Throws UnknownMethod.
MethodSpec parse_method(const std::string& text, int default_order = 1);

/// Expands "all" and parses the rest.
std::vector<MethodSpec> expand_methods(const std::vector<std::string>& names, const ProblemOptions& options);

std::vector<std::string> all_method_names();

BoundResult evaluate(const MethodSpec& spec, const ProblemInstance& inst);

}  // namespace young
