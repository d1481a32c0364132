#pragma once

#include <optional>
#include <string>
#include <vector>

#include "young/bounds.hpp"

namespace young::detail {

double ipow(double x, int k);
double factorial(int k);

/// Sign of h^(k) sampled at 257 points of [alpha, beta].
struct SignSample {
  bool nonneg = true;
  bool nonpos = true;
  bool defined = true;
  double min = 0.0;
  double max = 0.0;
};
SignSample sample_sign(const ProblemInstance& inst, int k);

/// Checks h^(k) >= 0 (want = +1) or <= 0 (want = -1); honors `assume`.
Diagnostic require_sign(const ProblemInstance& inst, int k, int want);

/// +1 if h^(k) >= 0 on [alpha, beta], -1 if <= 0, 0 if neither. Appends a
/// diagnostic; a vanishing h^(k) counts as +1.
int sign_direction(const ProblemInstance& inst, int k, std::vector<Diagnostic>& diags);

/// -1 when d < 0 and n is odd: the Cauchy remainder then has sign (-1)^n.
int remainder_sign(const ProblemInstance& inst, int n);

/// C_{r,n} = [|d|^{r(n+1)+1} / (r(n+1)+1)]^{1/r}; |d|^{n+1} at +inf, 0 at -inf.
double holder_constant(double abs_d, double r, int n);

/// Orders the pair; records a diagnostic when a swap was needed.
void normalize(BoundResult& result);

/// Remainder-type target: Gap for n = 0, Remainder(n) otherwise.
TargetQuantity remainder_target(const ProblemInstance& inst, int n);

std::string format_number(double v);

/// Shared body of the Holder-type estimators; n = 0 bounds the gap itself.
BoundResult holder_bound(const ProblemInstance& inst, int n, ExponentPair lower, ExponentPair upper,
                         std::string method);

}  // namespace young::detail
