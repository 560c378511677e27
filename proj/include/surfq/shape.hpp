#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "surfq/jet.hpp"

namespace surfq {

// Expression tree for a shape function S(rho). Nodes are immutable and
// shared, so a ShapeExpr can be copied cheaply and evaluated concurrently.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

enum class Function { Sin, Cos, Tan, Exp, Ln, Sqrt, Sinh, Cosh, Tanh };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class NamedConstant { Pi };

struct NumberNode {
  double value;
};
struct VariableNode {};
struct ConstantNode {
  NamedConstant which;
};
struct NegateNode {
  ExprPtr operand;
};
struct BinaryNode {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct CallNode {
  Function function;
  ExprPtr argument;
};

struct ExprNode {
  std::variant<NumberNode, VariableNode, ConstantNode, NegateNode, BinaryNode, CallNode> kind;
};

std::string_view function_name(Function f);

class ShapeExpr {
 public:
  explicit ShapeExpr(ExprPtr root);

  const ExprNode& root() const { return *root_; }
  const ExprPtr& root_ptr() const { return root_; }

  double value(double rho) const;
  Jet1 jet1(double rho) const;
  Jet2 jet2(double rho) const;
  Jet3 jet3(double rho) const;

  // Canonical text: minimal parentheses, shortest round-trip literals.
  std::string to_string() const;

  // True when the expression does not reference rho.
  bool is_constant() const;

  friend bool operator==(const ShapeExpr& a, const ShapeExpr& b);

 private:
  ExprPtr root_;
};

/// Parse a shape function over the variable `rho`.
///
/// Grammar (whitespace insignificant, no implicit multiplication):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := '-' unary | power
///     power   := primary ('^' unary)?
///     primary := number | 'rho' | 'pi' | func '(' expr ')' | '(' expr ')'
///
/// `^` is right-associative and binds tighter than unary minus, so
/// `-rho^2` is `-(rho^2)`. Throws ShapeSyntaxError (with byte offset and the
/// expected-token set) or UnknownIdentifierError.
ShapeExpr parse_shape(std::string_view src);

/// (S, S', S'') at rho via second-order dual numbers. Throws
/// ShapeDomainError naming the offending subexpression.
Jet2 eval_jet2(const ShapeExpr& expr, double rho);

std::string print_shape(const ShapeExpr& expr);

bool structurally_equal(const ExprNode& a, const ExprNode& b);

}  // namespace surfq
