#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ostro/core.hpp"

// Expression language over the variables t and s:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' factor)?
//   atom   := number | 't' | 's' | 'pi' | 'e' | fn '(' expr ')' | '(' expr ')'
//   fn     := sin | cos | exp | log | sqrt
//
// '^' is right-associative and binds tighter than unary minus. U+2212 is
// accepted as a minus sign.
namespace ostro::expr {

enum class TokenKind { Number, Ident, Op, LParen, RParen, Comma };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t position;  // byte offset
  double value = 0.0;     // Number tokens only
};

/// Throws LexError with the offending offset.
std::vector<Token> tokenize(std::string_view text);

enum class Var { T, S };
enum class Fn { Sin, Cos, Exp, Log, Sqrt };
enum class BinOp { Add, Sub, Mul, Div, Pow };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct Constant {
  double value;
  std::string name;  // "pi", "e" or empty
};
struct Variable {
  Var var;
};
struct Negate {
  Expr child;
};
struct Call {
  Fn fn;
  Expr arg;
};
struct Binary {
  BinOp op;
  Expr lhs;
  Expr rhs;
};

struct ExprNode {
  std::variant<Constant, Variable, Negate, Call, Binary> node;
};

Expr constant(double v);
Expr named_constant(std::string_view name);
Expr variable(Var v);
Expr negate(Expr child);
Expr call(Fn fn, Expr arg);
Expr binary(BinOp op, Expr lhs, Expr rhs);

std::string_view fn_name(Fn fn) noexcept;

/// Throws ParseError with position and what was expected.
Expr parse(std::span<const Token> tokens);
Expr parse(std::string_view text);

/// Throws DomainError for log of a non-positive value, sqrt of a negative,
/// division by zero, 0 raised to a negative power and a negative base with
/// a non-integer exponent.
double evaluate(const Expr& e, double t, double s);

/// Symbolic derivative followed by simplify(). Throws UnsupportedDerivative
/// for '^' with a non-constant exponent unless the base is a positive
/// constant or an exp(...) call.
Expr differentiate(const Expr& e, Var v);

/// Constant folding plus the identities x*1, x+0, x-0, x/1, x^1, x^0, x*0
/// and double negation.
Expr simplify(const Expr& e);

bool depends_on(const Expr& e, Var v);
std::size_t node_count(const Expr& e);

/// Minimal-parenthesis printer. Numbers use the shortest round-trip form,
/// so parse(to_string(e)) evaluates identically to e.
std::string to_string(const Expr& e);

/// Flattened stack program; evaluates the same way as evaluate() but
/// without pointer chasing. Immutable and shareable across threads.
class CompiledExpr {
 public:
  explicit CompiledExpr(const Expr& e);
  double operator()(double t, double s) const;

  struct Instr {
    enum class Op {
      Const, T, S, Neg, Add, Sub, Mul, Div, PowInt, Pow, Sin, Cos, Exp, Log, Sqrt
    } op;
    double value = 0.0;
    int exponent = 0;
  };

 private:
  std::vector<Instr> code_;
  std::size_t max_depth_ = 0;
};

/// eval is the compiled expression; mixed is d/ds(d/dt e) when
/// differentiation succeeds and empty otherwise. The label is to_string(e).
BivariateFunction to_bivariate(const Expr& e);

/// s is bound to 0. deriv is d/dt e when differentiation succeeds.
UnivariateFunction to_univariate(const Expr& e);

}  // namespace ostro::expr
