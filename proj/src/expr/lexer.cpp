#include <cctype>
#include <charconv>
#include <string>

#include "ostro/expr.hpp"

namespace ostro::expr {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

[[noreturn]] void lex_fail(const std::string& what, std::size_t pos) {
  throw Error(ErrorCode::LexError, what, pos);
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(text[i + 1]))) {
      while (i < n && is_digit(text[i])) ++i;
      if (i < n && text[i] == '.') {
        if (i + 1 >= n || !is_digit(text[i + 1])) lex_fail("malformed number", i);
        ++i;
        while (i < n && is_digit(text[i])) ++i;
      }
      if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < n && (text[j] == '+' || text[j] == '-')) ++j;
        if (j < n && is_digit(text[j])) {
          while (j < n && is_digit(text[j])) ++j;
          i = j;
        }
      }
      if (i < n && text[i] == '.') lex_fail("malformed number", i);
      Token tok{TokenKind::Number, std::string(text.substr(start, i - start)), start};
      const auto res = std::from_chars(text.data() + start, text.data() + i, tok.value);
      if (res.ec != std::errc() || res.ptr != text.data() + i)
        lex_fail("number out of range", start);
      out.push_back(std::move(tok));
      continue;
    }
    if (is_ident_start(c)) {
      while (i < n && is_ident_char(text[i])) ++i;
      out.push_back({TokenKind::Ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (text.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
      i += kUnicodeMinus.size();
      out.push_back({TokenKind::Op, "-", start});
      continue;
    }
    switch (c) {
      case '+':
      case '-':
      case '*':
      case '/':
      case '^':
        out.push_back({TokenKind::Op, std::string(1, c), start});
        break;
      case '(':
        out.push_back({TokenKind::LParen, "(", start});
        break;
      case ')':
        out.push_back({TokenKind::RParen, ")", start});
        break;
      case ',':
        out.push_back({TokenKind::Comma, ",", start});
        break;
      default: {
        std::string shown = (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f)
                                ? "byte " + std::to_string(static_cast<unsigned char>(c))
                                : std::string("'") + c + "'";
        lex_fail("unexpected character " + shown, start);
      }
    }
    ++i;
  }
  return out;
}

}  // namespace ostro::expr
