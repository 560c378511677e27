#include <array>
#include <utility>

#include "lexer.hpp"
#include "surfq/error.hpp"
#include "surfq/shape.hpp"

namespace surfq {

namespace {

using shape_detail::Token;
using shape_detail::TokenKind;

constexpr std::array<std::pair<std::string_view, Function>, 9> kFunctions{{
    {"sin", Function::Sin},
    {"cos", Function::Cos},
    {"tan", Function::Tan},
    {"exp", Function::Exp},
    {"ln", Function::Ln},
    {"sqrt", Function::Sqrt},
    {"sinh", Function::Sinh},
    {"cosh", Function::Cosh},
    {"tanh", Function::Tanh},
}};

ExprPtr make(auto node) { return std::make_shared<const ExprNode>(ExprNode{std::move(node)}); }

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().kind != TokenKind::End) fail({"operator", "end of input"});
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  bool accept(TokenKind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string msg = "syntax error at offset " + std::to_string(t.offset) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + (t.kind == TokenKind::End ? shape_detail::describe(t.kind)
                                                   : "'" + std::string(t.text) + "'");
    throw ShapeSyntaxError(t.offset, std::move(expected), msg);
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      if (accept(TokenKind::Plus)) {
        lhs = make(BinaryNode{BinaryOp::Add, lhs, term()});
      } else if (accept(TokenKind::Minus)) {
        lhs = make(BinaryNode{BinaryOp::Sub, lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      if (accept(TokenKind::Star)) {
        lhs = make(BinaryNode{BinaryOp::Mul, lhs, unary()});
      } else if (accept(TokenKind::Slash)) {
        lhs = make(BinaryNode{BinaryOp::Div, lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (accept(TokenKind::Minus)) return make(NegateNode{unary()});
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (accept(TokenKind::Caret)) return make(BinaryNode{BinaryOp::Pow, base, unary()});
    return base;
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number:
        advance();
        return make(NumberNode{t.number});
      case TokenKind::LParen: {
        advance();
        ExprPtr inner = expr();
        if (!accept(TokenKind::RParen)) fail({"operator", "')'"});
        return inner;
      }
      case TokenKind::Identifier:
        return identifier();
      default:
        fail({"number", "identifier", "'('", "'-'"});
    }
  }

  ExprPtr identifier() {
    const Token& t = advance();
    if (t.text == "rho") return make(VariableNode{});
    if (t.text == "pi") return make(ConstantNode{NamedConstant::Pi});
    for (const auto& [name, fn] : kFunctions) {
      if (t.text != name) continue;
      if (!accept(TokenKind::LParen)) fail({"'('"});
      ExprPtr arg = expr();
      if (!accept(TokenKind::RParen)) fail({"operator", "')'"});
      return make(CallNode{fn, arg});
    }
    throw UnknownIdentifierError(t.offset, std::string(t.text));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string_view function_name(Function f) {
  for (const auto& [name, fn] : kFunctions) {
    if (fn == f) return name;
  }
  return "?";
}

ShapeExpr parse_shape(std::string_view src) {
  Parser parser(shape_detail::tokenize(src));
  return ShapeExpr(parser.parse());
}

}  // namespace surfq
