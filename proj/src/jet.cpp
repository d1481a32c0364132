#include "young/jet.hpp"

#include <cmath>
#include <string>

namespace young {

namespace {

// Truncated Taylor series: c[k] = f^(k)(x0) / k!.
using Series = std::vector<double>;

void require_finite(const Series& s, const char* what) {
  for (double v : s) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + " is not finite");
  }
}

Series mul(const Series& u, const Series& v) {
  const std::size_t n = u.size();
  Series w(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    long double acc = 0.0L;
    for (std::size_t j = 0; j <= k; ++j) acc += static_cast<long double>(u[j]) * v[k - j];
    w[k] = static_cast<double>(acc);
  }
  return w;
}

Series div(const Series& u, const Series& v) {
  if (v[0] == 0.0) throw DomainError("division by zero");
  const std::size_t n = u.size();
  Series q(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    long double acc = u[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= static_cast<long double>(v[j]) * q[k - j];
    q[k] = static_cast<double>(acc / v[0]);
  }
  return q;
}

Series series_exp(const Series& u) {
  const std::size_t n = u.size();
  Series e(n, 0.0);
  e[0] = std::exp(u[0]);
  for (std::size_t k = 1; k < n; ++k) {
    long double acc = 0.0L;
    for (std::size_t j = 1; j <= k; ++j) acc += static_cast<long double>(j) * u[j] * e[k - j];
    e[k] = static_cast<double>(acc / k);
  }
  return e;
}

Series series_ln(const Series& u) {
  if (!(u[0] > 0.0)) throw DomainError("ln of a nonpositive value");
  const std::size_t n = u.size();
  Series l(n, 0.0);
  l[0] = std::log(u[0]);
  for (std::size_t k = 1; k < n; ++k) {
    long double acc = 0.0L;
    for (std::size_t j = 1; j < k; ++j) acc += static_cast<long double>(j) * l[j] * u[k - j];
    l[k] = static_cast<double>((u[k] - acc / k) / u[0]);
  }
  return l;
}

Series series_sqrt(const Series& u) {
  if (u[0] < 0.0) throw DomainError("sqrt of a negative value");
  const std::size_t n = u.size();
  Series s(n, 0.0);
  s[0] = std::sqrt(u[0]);
  if (n > 1 && s[0] == 0.0) throw DomainError("sqrt is not differentiable at 0");
  for (std::size_t k = 1; k < n; ++k) {
    long double acc = u[k];
    for (std::size_t j = 1; j < k; ++j) acc -= static_cast<long double>(s[j]) * s[k - j];
    s[k] = static_cast<double>(acc / (2.0L * s[0]));
  }
  return s;
}

Series int_pow(Series base, unsigned long e) {
  Series result(base.size(), 0.0);
  result[0] = 1.0;
  while (e > 0) {
    if (e & 1UL) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Series series_pow(const Series& u, double c) {
  const std::size_t n = u.size();
  const bool integral = std::floor(c) == c;
  if (integral && std::fabs(c) <= 64.0) {
    const auto e = static_cast<unsigned long>(std::fabs(c));
    Series p = int_pow(u, e);
    if (c >= 0.0) return p;
    Series one(n, 0.0);
    one[0] = 1.0;
    if (p[0] == 0.0) throw DomainError("zero raised to a negative power");
    return div(one, p);
  }
  if (u[0] < 0.0 && !integral) throw DomainError("negative base with fractional exponent");
  if (u[0] == 0.0) {
    if (c < 0.0) throw DomainError("zero raised to a negative power");
    if (n > 1) throw DomainError("power not differentiable at 0");
    return Series{0.0};
  }
  Series p(n, 0.0);
  p[0] = std::pow(u[0], c);
  for (std::size_t k = 1; k < n; ++k) {
    long double acc = 0.0L;
    for (std::size_t j = 1; j <= k; ++j) {
      acc += (c * static_cast<long double>(j) - static_cast<long double>(k - j)) * u[j] * p[k - j];
    }
    p[k] = static_cast<double>(acc / (static_cast<long double>(k) * u[0]));
  }
  return p;
}

Series propagate(const Node& node, double x0, std::size_t len) {
  switch (node.op) {
    case Op::Constant: {
      Series s(len, 0.0);
      s[0] = node.value;
      return s;
    }
    case Op::Variable: {
      Series s(len, 0.0);
      s[0] = x0;
      if (len > 1) s[1] = 1.0;
      return s;
    }
    case Op::Add: {
      Series u = propagate(*node.lhs, x0, len);
      const Series v = propagate(*node.rhs, x0, len);
      for (std::size_t k = 0; k < len; ++k) u[k] += v[k];
      return u;
    }
    case Op::Sub: {
      Series u = propagate(*node.lhs, x0, len);
      const Series v = propagate(*node.rhs, x0, len);
      for (std::size_t k = 0; k < len; ++k) u[k] -= v[k];
      return u;
    }
    case Op::Mul:
      return mul(propagate(*node.lhs, x0, len), propagate(*node.rhs, x0, len));
    case Op::Div:
      return div(propagate(*node.lhs, x0, len), propagate(*node.rhs, x0, len));
    case Op::Pow:
      return series_pow(propagate(*node.lhs, x0, len), node.value);
    case Op::Exp:
      return series_exp(propagate(*node.lhs, x0, len));
    case Op::Ln:
      return series_ln(propagate(*node.lhs, x0, len));
    case Op::Sqrt:
      return series_sqrt(propagate(*node.lhs, x0, len));
    case Op::Neg: {
      Series u = propagate(*node.lhs, x0, len);
      for (double& v : u) v = -v;
      return u;
    }
  }
  throw DomainError("corrupt expression node");
}

}  // namespace

TaylorJet jet(const Expr& expr, double x0, int order, int max_order) {
  if (order < 0) throw OrderCap("negative derivative order");
  if (order > max_order) {
    throw OrderCap("order " + std::to_string(order) + " exceeds cap " + std::to_string(max_order));
  }
  const auto len = static_cast<std::size_t>(order) + 1;
  Series coeffs = propagate(expr.root(), x0, len);
  require_finite(coeffs, "derivative");

  TaylorJet out;
  out.center = x0;
  out.order = order;
  out.derivs.resize(len);
  // Order 0 goes through the scalar evaluator so it agrees bit for bit.
  out.derivs[0] = eval(expr, x0);
  long double factorial = 1.0L;
  for (std::size_t k = 1; k < len; ++k) {
    factorial *= static_cast<long double>(k);
    out.derivs[k] = static_cast<double>(static_cast<long double>(coeffs[k]) * factorial);
  }
  return out;
}

double derivative(const Expr& expr, double x0, int k) { return jet(expr, x0, k).derivs.back(); }

}  // namespace young
