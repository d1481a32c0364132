#pragma once

// Expression trees for the increasing function h(x).
//
// Grammar (whitespace ignored):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?          right associative
//   primary := number | 'x' | 'e' | 'pi' | func '(' expr ')' | '(' expr ')'
//   func    := 'exp' | 'ln' | 'sqrt'
//
// Exponents must not depend on x.

#include <cmath>
#include <memory>
#include <string>
#include <string_view>

#include "young/errors.hpp"

namespace young {

enum class Op { Constant, Variable, Add, Sub, Mul, Div, Pow, Exp, Ln, Sqrt, Neg };

struct Node {
  Op op = Op::Constant;
  /// Constant value, or the evaluated exponent for Op::Pow.
  double value = 0.0;
  std::shared_ptr<const Node> lhs;
  /// Second operand; for Op::Pow the x-free exponent subtree.
  std::shared_ptr<const Node> rhs;
};

/// Immutable parsed expression. Copies share the tree.
class Expr {
 public:
  Expr(std::shared_ptr<const Node> root, std::string source)
      : root_(std::move(root)), source_(std::move(source)) {}

  const Node& root() const noexcept { return *root_; }
  const std::string& source() const noexcept { return source_; }

  double operator()(double x) const;

 private:
  std::shared_ptr<const Node> root_;
  std::string source_;
};

Expr parse_expr(std::string_view text);

/// IEEE double evaluation. Throws DomainError outside the real domain.
double eval(const Expr& expr, double x);

/// Fully parenthesized text that parses back to a structurally equal tree.
std::string serialize(const Expr& expr);

bool structurally_equal(const Node& lhs, const Node& rhs);
inline bool structurally_equal(const Expr& lhs, const Expr& rhs) {
  return structurally_equal(lhs.root(), rhs.root());
}

/// True when the subtree mentions x.
bool depends_on_x(const Node& node);

/// Evaluation in an arbitrary real scalar type (used with multiprecision
/// types by the test oracles). Constants keep their double values.
template <class T>
T eval_as(const Node& node, const T& x) {
  using std::exp;
  using std::log;
  using std::pow;
  using std::sqrt;
  switch (node.op) {
    case Op::Constant:
      return T(node.value);
    case Op::Variable:
      return x;
    case Op::Add:
      return eval_as(*node.lhs, x) + eval_as(*node.rhs, x);
    case Op::Sub:
      return eval_as(*node.lhs, x) - eval_as(*node.rhs, x);
    case Op::Mul:
      return eval_as(*node.lhs, x) * eval_as(*node.rhs, x);
    case Op::Div: {
      T den = eval_as(*node.rhs, x);
      if (den == T(0)) throw DomainError("division by zero");
      return eval_as(*node.lhs, x) / den;
    }
    case Op::Pow: {
      T base = eval_as(*node.lhs, x);
      const double c = node.value;
      const bool integral = std::floor(c) == c;
      if (base < T(0) && !integral) throw DomainError("negative base with fractional exponent");
      if (base == T(0) && c < 0) throw DomainError("zero raised to a negative power");
      return pow(base, T(c));
    }
    case Op::Exp:
      return exp(eval_as(*node.lhs, x));
    case Op::Ln: {
      T arg = eval_as(*node.lhs, x);
      if (!(arg > T(0))) throw DomainError("ln of a nonpositive value");
      return log(arg);
    }
    case Op::Sqrt: {
      T arg = eval_as(*node.lhs, x);
      if (arg < T(0)) throw DomainError("sqrt of a negative value");
      return sqrt(arg);
    }
    case Op::Neg:
      return -eval_as(*node.lhs, x);
  }
  throw DomainError("corrupt expression node");
}

}  // namespace young
