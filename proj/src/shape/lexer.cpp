#include "lexer.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "surfq/error.hpp"

namespace surfq::shape_detail {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::size_t scan_number(std::string_view src, std::size_t pos) {
  std::size_t i = pos;
  while (i < src.size() && is_digit(src[i])) ++i;
  if (i < src.size() && src[i] == '.') {
    ++i;
    while (i < src.size() && is_digit(src[i])) ++i;
  }
  if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
    if (j < src.size() && is_digit(src[j])) {
      while (j < src.size() && is_digit(src[j])) ++j;
      i = j;
    }
  }
  return i;
}

}  // namespace

std::string describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Number: return "number";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::End: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c) || (c == '.' && i + 1 < src.size() && is_digit(src[i + 1]))) {
      const std::size_t end = scan_number(src, i);
      Token t{TokenKind::Number, start, src.substr(start, end - start)};
      const auto [ptr, ec] = std::from_chars(src.data() + start, src.data() + end, t.number);
      if (ec != std::errc{} || ptr != src.data() + end || !std::isfinite(t.number)) {
        throw ShapeSyntaxError(start, {"number"},
                               "number out of range at offset " + std::to_string(start));
      }
      out.push_back(t);
      i = end;
      continue;
    }
    if (is_ident_start(c)) {
      while (i < src.size() && is_ident_char(src[i])) ++i;
      out.push_back({TokenKind::Identifier, start, src.substr(start, i - start)});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::Plus; break;
      case '-': kind = TokenKind::Minus; break;
      case '*': kind = TokenKind::Star; break;
      case '/': kind = TokenKind::Slash; break;
      case '^': kind = TokenKind::Caret; break;
      case '(': kind = TokenKind::LParen; break;
      case ')': kind = TokenKind::RParen; break;
      default:
        throw ShapeSyntaxError(start, {"number", "identifier", "operator", "'('", "')'"},
                               "unexpected character '" + std::string(1, c) + "' at offset " +
                                   std::to_string(start));
    }
    out.push_back({kind, start, src.substr(start, 1)});
    ++i;
  }
  out.push_back({TokenKind::End, src.size(), {}});
  return out;
}

}  // namespace surfq::shape_detail
