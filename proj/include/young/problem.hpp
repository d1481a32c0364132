#pragma once

#include <optional>
#include <string>
#include <vector>

#include "young/expr.hpp"
#include "young/numerics.hpp"

namespace young {

/// Conjugate-style exponent pair (first pairs with C_r, second with the norm).
struct ExponentPair {
  double first = 1.0;
  double second = kInf;
};

struct ProblemOptions {
  double quad_rel_tol = 1e-12;
  int taylor_order = 1;
  int t_grid = 33;
  ExponentPair holder_lower{1.0, -kInf};
  ExponentPair holder_upper{1.0, kInf};
  double lp_p = kInf;
  std::optional<double> t;
  /// Reported sums are shifted by integrand_offset * a, for problems whose
  /// printed quantity integrates h + s instead of h.
  double integrand_offset = 0.0;
  /// Hypotheses asserted by the user, e.g. "h(3)>=0".
  std::vector<std::string> assume;
  /// User-supplied derivative ranges for the Polya estimators.
  std::optional<double> polya_lower;
  std::optional<double> polya_upper;
  bool reflect = true;
};

enum class Orientation { AAboveInverse = 1, Equal = 0, ABelowInverse = -1 };

struct Anchors {
  double h_inv_b = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double h_a = 0.0;
  Orientation orientation = Orientation::Equal;
  /// a - h^{-1}(b)
  double d() const noexcept {
    return orientation == Orientation::ABelowInverse ? alpha - beta : beta - alpha;
  }
};

struct OracleDetails {
  double gap = 0.0;
  double sum = 0.0;
  /// int_{h^{-1}(b)}^a h
  double shifted = 0.0;
  double canonical_error = 0.0;
  double direct_gap = 0.0;
  double direct_error = 0.0;
};

class ProblemInstance {
 public:
  /// Validates the data; c defaults to max(a, h^{-1}(b)).
  static ProblemInstance create(Expr h, double a, double b, std::optional<double> c = std::nullopt,
                                ProblemOptions options = {});

  const Expr& h() const noexcept { return h_; }
  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  const ProblemOptions& options() const noexcept { return options_; }
  const Anchors& anchors() const noexcept { return anchors_; }

  double eval_h(double x) const { return young::eval(h_, x); }
  double deriv(double x, int k) const;
  RealFn deriv_fn(int k) const;

  /// Reported sum = oracle sum + integrand_offset * a.
  double sum_shift() const noexcept { return options_.integrand_offset * a_; }

  /// JSON text that reproduces this instance via load_problem_text.
  std::string to_json() const;

 private:
  ProblemInstance() = default;

  Expr h_{nullptr, ""};
  double a_ = 0.0;
  double b_ = 0.0;
  double c_ = 0.0;
  ProblemOptions options_;
  Anchors anchors_;
};

/// h^{-1}(b) over [0, c], then alpha, beta, orientation.
Anchors compute_anchors(const Expr& h, double a, double b, double c);
Anchors anchors(const ProblemInstance& inst);

/// The Young gap computed as int_{h^{-1}(b)}^a h - ab + b h^{-1}(b), cross
/// checked against the direct two-integral form.
OracleDetails oracle_details(const ProblemInstance& inst);
double oracle_gap(const ProblemInstance& inst);
double oracle_sum(const ProblemInstance& inst);

}  // namespace young
