#pragma once

#include <vector>

#include "young/expr.hpp"

namespace young {

inline constexpr int kDefaultOrderCap = 16;

/// Derivatives of an expression at a point: derivs[k] = h^(k)(center).
struct TaylorJet {
  double center = 0.0;
  int order = 0;
  std::vector<double> derivs;
};

/// Propagates truncated Taylor coefficients through the tree and rescales
/// them by k!. Throws DomainError off the domain, OrderCap above max_order.
TaylorJet jet(const Expr& expr, double x0, int order, int max_order = kDefaultOrderCap);

/// Convenience: the k-th derivative alone.
double derivative(const Expr& expr, double x0, int k);

}  // namespace young
