#include "young/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <numbers>

namespace young {

namespace {

using NodePtr = std::shared_ptr<const Node>;

NodePtr make_leaf(Op op, double value = 0.0) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->value = value;
  return n;
}

NodePtr make_node(Op op, NodePtr lhs, NodePtr rhs = nullptr, double value = 0.0) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  n->value = value;
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("empty expression", pos_);
    NodePtr n = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw SyntaxError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return n;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) throw SyntaxError(std::string("expected '") + c + "' but input ended", pos_);
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = make_node(Op::Add, lhs, parse_term());
      } else if (accept('-')) {
        lhs = make_node(Op::Sub, lhs, parse_term());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = make_node(Op::Mul, lhs, parse_unary());
      } else if (accept('/')) {
        lhs = make_node(Op::Div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    if (accept('-')) return make_node(Op::Neg, parse_unary());
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t exp_at = pos_;
    NodePtr exponent = parse_unary();
    if (depends_on_x(*exponent)) throw UnsupportedFeature("exponent depends on x", exp_at);
    double c = 0.0;
    try {
      c = eval_as<double>(*exponent, 0.0);
    } catch (const DomainError& e) {
      throw SyntaxError(std::string("exponent is not a real constant (") + e.what() + ")", exp_at);
    }
    if (!std::isfinite(c)) throw SyntaxError("exponent is not finite", exp_at);
    return make_node(Op::Pow, base, exponent, c);
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(ch))) return parse_identifier();
    throw SyntaxError("unexpected character '" + std::string(1, ch) + "'", pos_);
  }

  NodePtr parse_number() {
    const std::size_t start = pos_;
    std::size_t i = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) {
        ++i;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (i < text_.size() && text_[i] == '.') {
      ++i;
      mantissa += digits();
    }
    if (mantissa == 0) throw SyntaxError("malformed number", start);
    if (i < text_.size() && (text_[i] == 'e' || text_[i] == 'E')) {
      // Only an exponent if digits follow; otherwise 'e' is left for the caller.
      std::size_t j = i + 1;
      if (j < text_.size() && (text_[j] == '+' || text_[j] == '-')) ++j;
      if (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) {
        i = j;
        digits();
      }
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + i;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw SyntaxError("malformed number", start);
    pos_ = i;
    return make_leaf(Op::Constant, value);
  }

  NodePtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") return make_leaf(Op::Variable);
    if (name == "e") return make_leaf(Op::Constant, std::numbers::e);
    if (name == "pi") return make_leaf(Op::Constant, std::numbers::pi);
    Op op;
    if (name == "exp") {
      op = Op::Exp;
    } else if (name == "ln") {
      op = Op::Ln;
    } else if (name == "sqrt") {
      op = Op::Sqrt;
    } else {
      throw SyntaxError("unknown identifier '" + std::string(name) + "'", start);
    }
    expect('(');
    NodePtr arg = parse_expr();
    expect(')');
    return make_node(op, arg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(std::string(what) + " is not finite");
  return v;
}

double eval_node(const Node& n, double x) {
  switch (n.op) {
    case Op::Constant:
      return n.value;
    case Op::Variable:
      return x;
    case Op::Add:
      return checked(eval_node(*n.lhs, x) + eval_node(*n.rhs, x), "sum");
    case Op::Sub:
      return checked(eval_node(*n.lhs, x) - eval_node(*n.rhs, x), "difference");
    case Op::Mul:
      return checked(eval_node(*n.lhs, x) * eval_node(*n.rhs, x), "product");
    case Op::Div: {
      const double den = eval_node(*n.rhs, x);
      if (den == 0.0) throw DomainError("division by zero");
      return checked(eval_node(*n.lhs, x) / den, "quotient");
    }
    case Op::Pow: {
      const double base = eval_node(*n.lhs, x);
      const bool integral = std::floor(n.value) == n.value;
      if (base < 0.0 && !integral) throw DomainError("negative base with fractional exponent");
      if (base == 0.0 && n.value < 0.0) throw DomainError("zero raised to a negative power");
      return checked(std::pow(base, n.value), "power");
    }
    case Op::Exp:
      return checked(std::exp(eval_node(*n.lhs, x)), "exp");
    case Op::Ln: {
      const double arg = eval_node(*n.lhs, x);
      if (!(arg > 0.0)) throw DomainError("ln of a nonpositive value");
      return std::log(arg);
    }
    case Op::Sqrt: {
      const double arg = eval_node(*n.lhs, x);
      if (arg < 0.0) throw DomainError("sqrt of a negative value");
      return std::sqrt(arg);
    }
    case Op::Neg:
      return -eval_node(*n.lhs, x);
  }
  throw DomainError("corrupt expression node");
}

void write(const Node& n, std::string& out) {
  auto binary = [&](const char* op) {
    out += '(';
    write(*n.lhs, out);
    out += op;
    write(*n.rhs, out);
    out += ')';
  };
  auto call = [&](const char* name) {
    out += name;
    out += '(';
    write(*n.lhs, out);
    out += ')';
  };
  switch (n.op) {
    case Op::Constant: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", n.value);
      out += buf;
      return;
    }
    case Op::Variable:
      out += 'x';
      return;
    case Op::Add:
      return binary(" + ");
    case Op::Sub:
      return binary(" - ");
    case Op::Mul:
      return binary(" * ");
    case Op::Div:
      return binary(" / ");
    case Op::Pow:
      out += '(';
      write(*n.lhs, out);
      out += ")^(";
      write(*n.rhs, out);
      out += ')';
      return;
    case Op::Exp:
      return call("exp");
    case Op::Ln:
      return call("ln");
    case Op::Sqrt:
      return call("sqrt");
    case Op::Neg:
      out += "(-";
      write(*n.lhs, out);
      out += ')';
      return;
  }
}

}  // namespace

double Expr::operator()(double x) const { return eval_node(*root_, x); }

Expr parse_expr(std::string_view text) { return Expr(Parser(text).parse(), std::string(text)); }

double eval(const Expr& expr, double x) { return eval_node(expr.root(), x); }

std::string serialize(const Expr& expr) {
  std::string out;
  write(expr.root(), out);
  return out;
}

bool depends_on_x(const Node& n) {
  if (n.op == Op::Variable) return true;
  if (n.lhs && depends_on_x(*n.lhs)) return true;
  return n.rhs && depends_on_x(*n.rhs);
}

bool structurally_equal(const Node& a, const Node& b) {
  if (a.op != b.op) return false;
  if ((a.op == Op::Constant || a.op == Op::Pow) && !(a.value == b.value)) return false;
  if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
  if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
  if (a.lhs && !structurally_equal(*a.lhs, *b.lhs)) return false;
  return !a.rhs || structurally_equal(*a.rhs, *b.rhs);
}

}  // namespace young
