#include <charconv>
#include <cmath>
#include <string>

#include "internal.hpp"

namespace surfq {

namespace {

// Binding strength used to decide where parentheses are required.
enum Prec : int { kAdd = 1, kMul = 2, kUnary = 3, kPow = 4, kAtom = 5 };

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return ec == std::errc{} ? std::string(buf, ptr) : std::to_string(v);
}

struct Printer {
  std::string out;

  static int precedence(const ExprNode& n) {
    if (const auto* num = std::get_if<NumberNode>(&n.kind)) {
      return std::signbit(num->value) ? kUnary : kAtom;
    }
    if (std::holds_alternative<NegateNode>(n.kind)) return kUnary;
    if (const auto* b = std::get_if<BinaryNode>(&n.kind)) {
      switch (b->op) {
        case BinaryOp::Add:
        case BinaryOp::Sub: return kAdd;
        case BinaryOp::Mul:
        case BinaryOp::Div: return kMul;
        case BinaryOp::Pow: return kPow;
      }
    }
    return kAtom;
  }

  void child(const ExprNode& n, int min_prec) {
    if (precedence(n) < min_prec) {
      out += '(';
      node(n);
      out += ')';
    } else {
      node(n);
    }
  }

  void node(const ExprNode& n) {
    std::visit([this](const auto& k) { emit(k); }, n.kind);
  }

  void emit(const NumberNode& k) {
    if (std::signbit(k.value)) out += '-';
    out += format_number(std::fabs(k.value));
  }
  void emit(const VariableNode&) { out += "rho"; }
  void emit(const ConstantNode&) { out += "pi"; }
  void emit(const NegateNode& k) {
    out += '-';
    child(*k.operand, kUnary);
  }
  void emit(const CallNode& k) {
    out += function_name(k.function);
    out += '(';
    node(*k.argument);
    out += ')';
  }
  void emit(const BinaryNode& k) {
    switch (k.op) {
      case BinaryOp::Add:
      case BinaryOp::Sub:
        child(*k.lhs, kAdd);
        out += k.op == BinaryOp::Add ? " + " : " - ";
        child(*k.rhs, kAdd + 1);
        break;
      case BinaryOp::Mul:
      case BinaryOp::Div:
        child(*k.lhs, kMul);
        out += k.op == BinaryOp::Mul ? '*' : '/';
        child(*k.rhs, kMul + 1);
        break;
      case BinaryOp::Pow:
        child(*k.lhs, kAtom);
        out += '^';
        child(*k.rhs, kUnary);
        break;
    }
  }
};

}  // namespace

std::string print_node(const ExprNode& n) {
  Printer p;
  p.node(n);
  return std::move(p.out);
}

std::string print_shape(const ShapeExpr& expr) { return print_node(expr.root()); }

std::string ShapeExpr::to_string() const { return print_shape(*this); }

}  // namespace surfq
