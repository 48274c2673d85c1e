#include <algorithm>
#include <array>

#include "eval_ops.hpp"
#include "ostro/expr.hpp"

namespace ostro::expr {
namespace {

using Op = CompiledExpr::Instr::Op;

struct Emitter {
  std::vector<CompiledExpr::Instr> code;
  std::size_t depth = 0;
  std::size_t max_depth = 0;

  void push(CompiledExpr::Instr in, int stack_delta) {
    code.push_back(in);
    depth = static_cast<std::size_t>(static_cast<long>(depth) + stack_delta);
    max_depth = std::max(max_depth, depth);
  }

  void emit(const Expr& e) {
    std::visit(
        [&](const auto& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Constant>) {
            push({Op::Const, n.value}, +1);
          } else if constexpr (std::is_same_v<N, Variable>) {
            push({n.var == Var::T ? Op::T : Op::S}, +1);
          } else if constexpr (std::is_same_v<N, Negate>) {
            emit(n.child);
            push({Op::Neg}, 0);
          } else if constexpr (std::is_same_v<N, Call>) {
            emit(n.arg);
            static constexpr Op ops[] = {Op::Sin, Op::Cos, Op::Exp, Op::Log, Op::Sqrt};
            push({ops[static_cast<int>(n.fn)]}, 0);
          } else {
            emit(n.lhs);
            if (n.op == BinOp::Pow) {
              if (const auto* c = std::get_if<Constant>(&n.rhs->node)) {
                if (auto k = detail::small_integer(c->value)) {
                  push({Op::PowInt, 0.0, *k}, 0);
                  return;
                }
              }
            }
            emit(n.rhs);
            static constexpr Op ops[] = {Op::Add, Op::Sub, Op::Mul, Op::Div, Op::Pow};
            push({ops[static_cast<int>(n.op)]}, -1);
          }
        },
        e->node);
  }
};

double run(const std::vector<CompiledExpr::Instr>& code, double* stack, double t, double s) {
  double* sp = stack;  // next free slot
  for (const auto& in : code) {
    switch (in.op) {
      case Op::Const: *sp++ = in.value; break;
      case Op::T: *sp++ = t; break;
      case Op::S: *sp++ = s; break;
      case Op::Neg: sp[-1] = -sp[-1]; break;
      case Op::Add: --sp; sp[-1] = sp[-1] + sp[0]; break;
      case Op::Sub: --sp; sp[-1] = sp[-1] - sp[0]; break;
      case Op::Mul: --sp; sp[-1] = sp[-1] * sp[0]; break;
      case Op::Div: --sp; sp[-1] = detail::divide(sp[-1], sp[0]); break;
      case Op::Pow: --sp; sp[-1] = detail::pow_real(sp[-1], sp[0]); break;
      case Op::PowInt: sp[-1] = detail::pow_int(sp[-1], in.exponent); break;
      case Op::Sin: sp[-1] = detail::apply_fn(Fn::Sin, sp[-1]); break;
      case Op::Cos: sp[-1] = detail::apply_fn(Fn::Cos, sp[-1]); break;
      case Op::Exp: sp[-1] = detail::apply_fn(Fn::Exp, sp[-1]); break;
      case Op::Log: sp[-1] = detail::apply_fn(Fn::Log, sp[-1]); break;
      case Op::Sqrt: sp[-1] = detail::apply_fn(Fn::Sqrt, sp[-1]); break;
    }
  }
  return stack[0];
}

}  // namespace

CompiledExpr::CompiledExpr(const Expr& e) {
  Emitter em;
  em.emit(e);
  code_ = std::move(em.code);
  max_depth_ = em.max_depth;
}

double CompiledExpr::operator()(double t, double s) const {
  if (max_depth_ <= 64) {
    std::array<double, 64> stack;
    return run(code_, stack.data(), t, s);
  }
  std::vector<double> stack(max_depth_);
  return run(code_, stack.data(), t, s);
}

}  // namespace ostro::expr
