#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace surfq::shape_detail {

enum class TokenKind { Number, Identifier, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokenKind kind;
  std::size_t offset;
  std::string_view text;
  double number = 0.0;
};

std::vector<Token> tokenize(std::string_view src);

std::string describe(TokenKind kind);

}  // namespace surfq::shape_detail
