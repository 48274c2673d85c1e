#include <string>

#include "ostro/expr.hpp"

namespace ostro::expr {
namespace {

constexpr int kMaxNesting = 1000;

class Parser {
 public:
  Parser(std::span<const Token> tokens, std::size_t end_pos) : toks_(tokens), end_pos_(end_pos) {}

  Expr parse_all() {
    if (toks_.empty()) fail("expected expression, got end of input");
    Expr e = parse_expr();
    if (pos_ < toks_.size()) fail("expected operator or end of input, got '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return pos_ >= toks_.size(); }
  std::size_t here() const { return at_end() ? end_pos_ : peek().position; }
  bool peek_op(char c) const {
    return !at_end() && peek().kind == TokenKind::Op && peek().text[0] == c;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what, here());
  }

  struct DepthGuard {
    int& depth;
    const Parser& p;
    DepthGuard(int& d, const Parser& parser) : depth(d), p(parser) {
      if (++depth > kMaxNesting) p.fail("expression nested too deeply");
    }
    ~DepthGuard() { --depth; }
  };

  Expr parse_expr() {
    DepthGuard guard(depth_, *this);
    Expr lhs = parse_term();
    while (peek_op('+') || peek_op('-')) {
      const BinOp op = peek().text[0] == '+' ? BinOp::Add : BinOp::Sub;
      ++pos_;
      lhs = binary(op, lhs, parse_term());
    }
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_factor();
    while (peek_op('*') || peek_op('/')) {
      const BinOp op = peek().text[0] == '*' ? BinOp::Mul : BinOp::Div;
      ++pos_;
      lhs = binary(op, lhs, parse_factor());
    }
    return lhs;
  }

  Expr parse_factor() {
    DepthGuard guard(depth_, *this);
    if (peek_op('-')) {
      ++pos_;
      // A minus directly followed by a literal (and no '^') is the literal's sign.
      if (!at_end() && peek().kind == TokenKind::Number &&
          !(pos_ + 1 < toks_.size() && toks_[pos_ + 1].kind == TokenKind::Op &&
            toks_[pos_ + 1].text == "^")) {
        const double v = peek().value;
        ++pos_;
        return constant(-v);
      }
      return negate(parse_factor());
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    if (peek_op('^')) {
      ++pos_;
      return binary(BinOp::Pow, base, parse_factor());
    }
    return base;
  }

  Expr parse_atom() {
    if (at_end()) fail("expected number, variable, function or '('");
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::Number:
        ++pos_;
        return constant(tok.value);
      case TokenKind::LParen: {
        ++pos_;
        Expr inner = parse_expr();
        expect_rparen();
        return inner;
      }
      case TokenKind::Ident:
        return parse_ident();
      default:
        fail("expected number, variable, function or '(', got '" + tok.text + "'");
    }
  }

  Expr parse_ident() {
    const Token& tok = peek();
    const std::string& name = tok.text;
    if (name == "t" || name == "s") {
      ++pos_;
      return variable(name == "t" ? Var::T : Var::S);
    }
    if (name == "pi" || name == "e") {
      ++pos_;
      return named_constant(name);
    }
    static const std::pair<const char*, Fn> fns[] = {
        {"sin", Fn::Sin}, {"cos", Fn::Cos}, {"exp", Fn::Exp}, {"log", Fn::Log}, {"sqrt", Fn::Sqrt}};
    for (const auto& [fname, fn] : fns) {
      if (name == fname) {
        ++pos_;
        if (at_end() || peek().kind != TokenKind::LParen)
          fail("expected '(' after function " + name);
        ++pos_;
        Expr arg = parse_expr();
        expect_rparen();
        return call(fn, arg);
      }
    }
    fail("unknown identifier '" + name + "' (expected t, s, pi, e or a function)");
  }

  void expect_rparen() {
    if (at_end() || peek().kind != TokenKind::RParen) {
      if (at_end()) fail("expected ')', got end of input");
      fail("expected ')', got '" + peek().text + "'");
    }
    ++pos_;
  }

  std::span<const Token> toks_;
  std::size_t end_pos_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

Expr parse(std::span<const Token> tokens) {
  const std::size_t end =
      tokens.empty() ? 0 : tokens.back().position + tokens.back().text.size();
  return Parser(tokens, end).parse_all();
}

Expr parse(std::string_view text) {
  const auto tokens = tokenize(text);
  return Parser(tokens, text.size()).parse_all();
}

}  // namespace ostro::expr
