#include <cmath>

#include "eval_ops.hpp"
#include "ostro/expr.hpp"

namespace ostro::expr {
namespace {

const Constant* as_constant(const Expr& e) { return std::get_if<Constant>(&e->node); }

bool is_value(const Expr& e, double v) {
  const Constant* c = as_constant(e);
  return c && c->value == v;
}

bool is_closed(const Expr& e) { return !depends_on(e, Var::T) && !depends_on(e, Var::S); }

// e has constant children only; fold unless the result is a domain error or
// non-finite, in which case the tree is left as is.
Expr try_fold(const Expr& e) {
  try {
    const double v = evaluate(e, 0.0, 0.0);
    if (std::isfinite(v)) return constant(v);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::DomainError) throw;
  }
  return e;
}

Expr simplify_negate(Expr child) {
  if (const Constant* c = as_constant(child)) return constant(-c->value);
  if (const auto* n = std::get_if<Negate>(&child->node)) return n->child;
  return negate(std::move(child));
}

Expr simplify_mul(Expr l, Expr r) {
  if (is_value(l, 0.0) || is_value(r, 0.0)) return constant(0.0);
  if (is_value(l, 1.0)) return r;
  if (is_value(r, 1.0)) return l;
  if (as_constant(r) && !as_constant(l)) std::swap(l, r);
  if (const Constant* lc = as_constant(l)) {
    if (lc->value == -1.0) return simplify_negate(r);
    if (const auto* rb = std::get_if<Binary>(&r->node)) {
      if (rb->op == BinOp::Mul) {
        if (const Constant* rc = as_constant(rb->lhs))
          return simplify_mul(constant(lc->value * rc->value), rb->rhs);
      }
    }
  }
  return binary(BinOp::Mul, std::move(l), std::move(r));
}

}  // namespace

Expr simplify(const Expr& e) {
  return std::visit(
      [&](const auto& n) -> Expr {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Constant> || std::is_same_v<N, Variable>) {
          return e;
        } else if constexpr (std::is_same_v<N, Negate>) {
          return simplify_negate(simplify(n.child));
        } else if constexpr (std::is_same_v<N, Call>) {
          Expr a = simplify(n.arg);
          Expr out = call(n.fn, a);
          return as_constant(a) ? try_fold(out) : out;
        } else {
          Expr l = simplify(n.lhs);
          Expr r = simplify(n.rhs);
          if (as_constant(l) && as_constant(r)) {
            Expr folded = try_fold(binary(n.op, l, r));
            if (as_constant(folded)) return folded;
          }
          switch (n.op) {
            case BinOp::Add:
              if (is_value(l, 0.0)) return r;
              if (is_value(r, 0.0)) return l;
              break;
            case BinOp::Sub:
              if (is_value(r, 0.0)) return l;
              if (is_value(l, 0.0)) return simplify_negate(r);
              break;
            case BinOp::Mul:
              return simplify_mul(l, r);
            case BinOp::Div:
              if (is_value(r, 1.0)) return l;
              if (is_value(l, 0.0) && as_constant(r)) return constant(0.0);
              break;
            case BinOp::Pow:
              if (is_value(r, 1.0)) return l;
              if (is_value(r, 0.0)) return constant(1.0);
              break;
          }
          return binary(n.op, l, r);
        }
      },
      e->node);
}

namespace {

Expr d_raw(const Expr& e, Var v);

Expr d_pow(const Expr& e, const Binary& n, Var v) {
  const Expr& base = n.lhs;
  const Expr& ex = n.rhs;
  if (is_closed(ex)) {
    if (!depends_on(base, v)) return constant(0.0);
    const double k = evaluate(ex, 0.0, 0.0);
    // k * base^(k-1) * base'
    return binary(BinOp::Mul,
                  binary(BinOp::Mul, constant(k), binary(BinOp::Pow, base, constant(k - 1.0))),
                  d_raw(base, v));
  }
  if (const Constant* c = as_constant(base); c && c->value > 0.0) {
    // c^u * log(c) * u'
    return binary(BinOp::Mul, binary(BinOp::Mul, e, call(Fn::Log, base)), d_raw(ex, v));
  }
  if (const auto* ce = std::get_if<Call>(&base->node); ce && ce->fn == Fn::Exp) {
    // exp(u)^w = exp(u w): derivative exp(u)^w * (w' u + w u')
    return binary(BinOp::Mul, e,
                  binary(BinOp::Add, binary(BinOp::Mul, d_raw(ex, v), ce->arg),
                         binary(BinOp::Mul, ex, d_raw(ce->arg, v))));
  }
  throw Error(ErrorCode::UnsupportedDerivative,
              "'^' with a non-constant exponent needs a positive constant or exp(...) base: " +
                  to_string(e));
}

Expr d_raw(const Expr& e, Var v) {
  if (!depends_on(e, v)) return constant(0.0);
  return std::visit(
      [&](const auto& n) -> Expr {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, Constant>) {
          return constant(0.0);
        } else if constexpr (std::is_same_v<N, Variable>) {
          return constant(n.var == v ? 1.0 : 0.0);
        } else if constexpr (std::is_same_v<N, Negate>) {
          return negate(d_raw(n.child, v));
        } else if constexpr (std::is_same_v<N, Call>) {
          const Expr da = d_raw(n.arg, v);
          switch (n.fn) {
            case Fn::Sin:
              return binary(BinOp::Mul, call(Fn::Cos, n.arg), da);
            case Fn::Cos:
              return negate(binary(BinOp::Mul, call(Fn::Sin, n.arg), da));
            case Fn::Exp:
              return binary(BinOp::Mul, e, da);
            case Fn::Log:
              return binary(BinOp::Div, da, n.arg);
            case Fn::Sqrt:
              return binary(BinOp::Div, da, binary(BinOp::Mul, constant(2.0), e));
          }
          return constant(0.0);
        } else {
          switch (n.op) {
            case BinOp::Add:
            case BinOp::Sub:
              return binary(n.op, d_raw(n.lhs, v), d_raw(n.rhs, v));
            case BinOp::Mul:
              return binary(BinOp::Add, binary(BinOp::Mul, d_raw(n.lhs, v), n.rhs),
                            binary(BinOp::Mul, n.lhs, d_raw(n.rhs, v)));
            case BinOp::Div:
              return binary(
                  BinOp::Div,
                  binary(BinOp::Sub, binary(BinOp::Mul, d_raw(n.lhs, v), n.rhs),
                         binary(BinOp::Mul, n.lhs, d_raw(n.rhs, v))),
                  binary(BinOp::Pow, n.rhs, constant(2.0)));
            case BinOp::Pow:
              return d_pow(e, n, v);
          }
          return constant(0.0);
        }
      },
      e->node);
}

}  // namespace

Expr differentiate(const Expr& e, Var v) { return simplify(d_raw(e, v)); }

}  // namespace ostro::expr
