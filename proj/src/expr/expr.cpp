#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "eval_ops.hpp"
#include "ostro/expr.hpp"

namespace ostro::expr {

Expr constant(double v) { return std::make_shared<const ExprNode>(ExprNode{Constant{v, {}}}); }

Expr named_constant(std::string_view name) {
  if (name == "pi")
    return std::make_shared<const ExprNode>(ExprNode{Constant{std::numbers::pi, "pi"}});
  if (name == "e")
    return std::make_shared<const ExprNode>(ExprNode{Constant{std::numbers::e, "e"}});
  throw Error(ErrorCode::ParseError, "unknown constant '" + std::string(name) + "'");
}

Expr variable(Var v) { return std::make_shared<const ExprNode>(ExprNode{Variable{v}}); }
Expr negate(Expr child) {
  return std::make_shared<const ExprNode>(ExprNode{Negate{std::move(child)}});
}
Expr call(Fn fn, Expr arg) {
  return std::make_shared<const ExprNode>(ExprNode{Call{fn, std::move(arg)}});
}
Expr binary(BinOp op, Expr lhs, Expr rhs) {
  return std::make_shared<const ExprNode>(ExprNode{Binary{op, std::move(lhs), std::move(rhs)}});
}

std::string_view fn_name(Fn fn) noexcept {
  switch (fn) {
    case Fn::Sin: return "sin";
    case Fn::Cos: return "cos";
    case Fn::Exp: return "exp";
    case Fn::Log: return "log";
    case Fn::Sqrt: return "sqrt";
  }
  return "?";
}

namespace detail {

double apply_fn(Fn fn, double x) {
  switch (fn) {
    case Fn::Sin: return std::sin(x);
    case Fn::Cos: return std::cos(x);
    case Fn::Exp: return std::exp(x);
    case Fn::Log:
      if (!(x > 0.0)) throw Error(ErrorCode::DomainError, "log of non-positive value");
      return std::log(x);
    case Fn::Sqrt:
      if (x < 0.0 || std::isnan(x)) throw Error(ErrorCode::DomainError, "sqrt of negative value");
      return std::sqrt(x);
  }
  return 0.0;
}

double divide(double a, double b) {
  if (b == 0.0) throw Error(ErrorCode::DomainError, "division by zero");
  return a / b;
}

double pow_int(double base, int n) {
  if (n < 0) {
    if (base == 0.0) throw Error(ErrorCode::DomainError, "0 raised to a negative power");
    return 1.0 / pow_int(base, -n);
  }
  double result = 1.0;
  double b = base;
  unsigned k = static_cast<unsigned>(n);
  while (k) {
    if (k & 1u) result *= b;
    k >>= 1u;
    if (k) b *= b;
  }
  return result;
}

double pow_real(double base, double exponent) {
  if (base == 0.0 && exponent < 0.0)
    throw Error(ErrorCode::DomainError, "0 raised to a negative power");
  if (base < 0.0 && exponent != std::floor(exponent))
    throw Error(ErrorCode::DomainError, "negative base with non-integer exponent");
  return std::pow(base, exponent);
}

std::optional<int> small_integer(double v) {
  if (v == std::floor(v) && std::abs(v) <= 1024.0) return static_cast<int>(v);
  return std::nullopt;
}

}  // namespace detail

double evaluate(const Expr& e, double t, double s) {
  return std::visit(
      [&](const auto& n) -> double {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Constant>) {
          return n.value;
        } else if constexpr (std::is_same_v<N, Variable>) {
          return n.var == Var::T ? t : s;
        } else if constexpr (std::is_same_v<N, Negate>) {
          return -evaluate(n.child, t, s);
        } else if constexpr (std::is_same_v<N, Call>) {
          return detail::apply_fn(n.fn, evaluate(n.arg, t, s));
        } else {
          const double l = evaluate(n.lhs, t, s);
          if (n.op == BinOp::Pow) {
            if (const auto* c = std::get_if<Constant>(&n.rhs->node)) {
              if (auto k = detail::small_integer(c->value)) return detail::pow_int(l, *k);
            }
            return detail::pow_real(l, evaluate(n.rhs, t, s));
          }
          const double r = evaluate(n.rhs, t, s);
          switch (n.op) {
            case BinOp::Add: return l + r;
            case BinOp::Sub: return l - r;
            case BinOp::Mul: return l * r;
            case BinOp::Div: return detail::divide(l, r);
            case BinOp::Pow: break;
          }
          return 0.0;
        }
      },
      e->node);
}

bool depends_on(const Expr& e, Var v) {
  return std::visit(
      [&](const auto& n) -> bool {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Constant>) return false;
        else if constexpr (std::is_same_v<N, Variable>) return n.var == v;
        else if constexpr (std::is_same_v<N, Negate>) return depends_on(n.child, v);
        else if constexpr (std::is_same_v<N, Call>) return depends_on(n.arg, v);
        else return depends_on(n.lhs, v) || depends_on(n.rhs, v);
      },
      e->node);
}

std::size_t node_count(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::size_t {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Negate>) return 1 + node_count(n.child);
        else if constexpr (std::is_same_v<N, Call>) return 1 + node_count(n.arg);
        else if constexpr (std::is_same_v<N, Binary>) return 1 + node_count(n.lhs) + node_count(n.rhs);
        else return 1;
      },
      e->node);
}

namespace {

// add/sub 1, mul/div 2, unary minus 3, '^' 4, atoms 5
int precedence(const Expr& e) {
  return std::visit(
      [](const auto& n) -> int {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Constant>) {
          return (n.name.empty() && std::signbit(n.value)) ? 3 : 5;
        } else if constexpr (std::is_same_v<N, Negate>) {
          return 3;
        } else if constexpr (std::is_same_v<N, Binary>) {
          switch (n.op) {
            case BinOp::Add:
            case BinOp::Sub: return 1;
            case BinOp::Mul:
            case BinOp::Div: return 2;
            case BinOp::Pow: return 4;
          }
          return 0;
        } else {
          return 5;
        }
      },
      e->node);
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void print(const Expr& e, std::string& out);

void print_child(const Expr& child, bool parens, std::string& out) {
  if (parens) out += '(';
  print(child, out);
  if (parens) out += ')';
}

void print(const Expr& e, std::string& out) {
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Constant>) {
          out += n.name.empty() ? format_number(n.value) : n.name;
        } else if constexpr (std::is_same_v<N, Variable>) {
          out += n.var == Var::T ? 't' : 's';
        } else if constexpr (std::is_same_v<N, Negate>) {
          out += '-';
          print_child(n.child, precedence(n.child) < 3, out);
        } else if constexpr (std::is_same_v<N, Call>) {
          out += fn_name(n.fn);
          out += '(';
          print(n.arg, out);
          out += ')';
        } else {
          const int lp = precedence(n.lhs);
          const int rp = precedence(n.rhs);
          switch (n.op) {
            case BinOp::Add:
            case BinOp::Sub:
              print_child(n.lhs, lp < 1, out);
              out += n.op == BinOp::Add ? " + " : " - ";
              print_child(n.rhs, rp <= 1, out);
              break;
            case BinOp::Mul:
            case BinOp::Div:
              print_child(n.lhs, lp < 2, out);
              out += n.op == BinOp::Mul ? '*' : '/';
              print_child(n.rhs, rp <= 2, out);
              break;
            case BinOp::Pow:
              print_child(n.lhs, lp <= 4, out);
              out += '^';
              print_child(n.rhs, rp < 3, out);
              break;
          }
        }
      },
      e->node);
}

}  // namespace

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

BivariateFunction to_bivariate(const Expr& e) {
  auto value = std::make_shared<const CompiledExpr>(e);
  ScalarFn2 mixed;
  try {
    const Expr m = differentiate(differentiate(e, Var::T), Var::S);
    auto compiled = std::make_shared<const CompiledExpr>(m);
    mixed = [compiled](double t, double s) { return (*compiled)(t, s); };
  } catch (const Error& err) {
    if (err.code() != ErrorCode::UnsupportedDerivative) throw;
  }
  return BivariateFunction([value](double t, double s) { return (*value)(t, s); },
                           std::move(mixed), to_string(e));
}

UnivariateFunction to_univariate(const Expr& e) {
  auto value = std::make_shared<const CompiledExpr>(e);
  UnivariateFunction f{[value](double t) { return (*value)(t, 0.0); }, {}};
  try {
    auto d = std::make_shared<const CompiledExpr>(differentiate(e, Var::T));
    f.deriv = [d](double t) { return (*d)(t, 0.0); };
  } catch (const Error& err) {
    if (err.code() != ErrorCode::UnsupportedDerivative) throw;
  }
  return f;
}

}  // namespace ostro::expr
