#include <cmath>
#include <numbers>
#include <type_traits>
#include <utility>

#include "internal.hpp"
#include "surfq/error.hpp"

namespace surfq {

namespace {

[[noreturn]] void domain_fail(const ExprNode& n, const std::string& why) {
  std::string sub = print_node(n);
  throw ShapeDomainError(sub, why + " in '" + sub + "'");
}

template <int N>
struct Evaluator {
  Jet<N> rho;

  Jet<N> operator()(const ExprNode& n) const {
    Jet<N> r = std::visit([&](const auto& k) { return eval(n, k); }, n.kind);
    if (!r.finite()) domain_fail(n, "non-finite value or derivative");
    return r;
  }

  Jet<N> eval(const ExprNode&, const NumberNode& k) const { return Jet<N>::constant(k.value); }
  Jet<N> eval(const ExprNode&, const VariableNode&) const { return rho; }
  Jet<N> eval(const ExprNode&, const ConstantNode&) const {
    return Jet<N>::constant(std::numbers::pi);
  }
  Jet<N> eval(const ExprNode&, const NegateNode& k) const { return -(*this)(*k.operand); }

  Jet<N> eval(const ExprNode& n, const CallNode& k) const {
    const Jet<N> x = (*this)(*k.argument);
    switch (k.function) {
      case Function::Sin: return sin(x);
      case Function::Cos: return cos(x);
      case Function::Tan: return tan(x);
      case Function::Exp: return exp(x);
      case Function::Sinh: return sinh(x);
      case Function::Cosh: return cosh(x);
      case Function::Tanh: return tanh(x);
      case Function::Ln:
        if (!(x.value() > 0.0)) domain_fail(n, "logarithm of non-positive argument");
        return log(x);
      case Function::Sqrt:
        if (x.value() < 0.0) domain_fail(n, "square root of negative argument");
        if (N > 0 && x.value() == 0.0) domain_fail(n, "square root is not differentiable at 0");
        return sqrt(x);
    }
    domain_fail(n, "unknown function");
  }

  Jet<N> eval(const ExprNode& n, const BinaryNode& k) const {
    const Jet<N> a = (*this)(*k.lhs);
    switch (k.op) {
      case BinaryOp::Add: return a + (*this)(*k.rhs);
      case BinaryOp::Sub: return a - (*this)(*k.rhs);
      case BinaryOp::Mul: return a * (*this)(*k.rhs);
      case BinaryOp::Div: {
        const Jet<N> b = (*this)(*k.rhs);
        if (b.value() == 0.0) domain_fail(n, "division by zero");
        return a / b;
      }
      case BinaryOp::Pow: return power(n, a, k);
    }
    domain_fail(n, "unknown operator");
  }

  Jet<N> power(const ExprNode& n, const Jet<N>& base, const BinaryNode& k) const {
    if (!depends_on_rho(*k.rhs)) {
      const double e = Evaluator<0>{Jet<0>::constant(0.0)}(*k.rhs).value();
      const bool integral = e == std::trunc(e);
      if (!integral && base.value() < 0.0) domain_fail(n, "non-integer power of negative base");
      if (base.value() == 0.0 && e < 0.0) domain_fail(n, "negative power of zero");
      return pow(base, e);
    }
    if (!(base.value() > 0.0)) domain_fail(n, "variable exponent requires a positive base");
    return exp((*this)(*k.rhs) * log(base));
  }
};

template <int N>
Jet<N> evaluate(const ExprNode& root, double rho) {
  return Evaluator<N>{Jet<N>::variable(rho)}(root);
}

}  // namespace

bool depends_on_rho(const ExprNode& n) {
  return std::visit(
      [](const auto& k) -> bool {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, VariableNode>) {
          return true;
        } else if constexpr (std::is_same_v<K, NegateNode>) {
          return depends_on_rho(*k.operand);
        } else if constexpr (std::is_same_v<K, BinaryNode>) {
          return depends_on_rho(*k.lhs) || depends_on_rho(*k.rhs);
        } else if constexpr (std::is_same_v<K, CallNode>) {
          return depends_on_rho(*k.argument);
        } else {
          return false;
        }
      },
      n.kind);
}

bool structurally_equal(const ExprNode& a, const ExprNode& b) {
  if (a.kind.index() != b.kind.index()) return false;
  return std::visit(
      [&b](const auto& ka) -> bool {
        using K = std::decay_t<decltype(ka)>;
        const K& kb = std::get<K>(b.kind);
        if constexpr (std::is_same_v<K, NumberNode>) {
          return ka.value == kb.value;
        } else if constexpr (std::is_same_v<K, ConstantNode>) {
          return ka.which == kb.which;
        } else if constexpr (std::is_same_v<K, NegateNode>) {
          return structurally_equal(*ka.operand, *kb.operand);
        } else if constexpr (std::is_same_v<K, BinaryNode>) {
          return ka.op == kb.op && structurally_equal(*ka.lhs, *kb.lhs) &&
                 structurally_equal(*ka.rhs, *kb.rhs);
        } else if constexpr (std::is_same_v<K, CallNode>) {
          return ka.function == kb.function && structurally_equal(*ka.argument, *kb.argument);
        } else {
          return true;
        }
      },
      a.kind);
}

ShapeExpr::ShapeExpr(ExprPtr root) : root_(std::move(root)) {}

double ShapeExpr::value(double rho) const { return evaluate<0>(*root_, rho).value(); }
Jet1 ShapeExpr::jet1(double rho) const { return evaluate<1>(*root_, rho); }
Jet2 ShapeExpr::jet2(double rho) const { return evaluate<2>(*root_, rho); }
Jet3 ShapeExpr::jet3(double rho) const { return evaluate<3>(*root_, rho); }

bool ShapeExpr::is_constant() const { return !depends_on_rho(*root_); }

bool operator==(const ShapeExpr& a, const ShapeExpr& b) {
  return structurally_equal(*a.root_, *b.root_);
}

Jet2 eval_jet2(const ShapeExpr& expr, double rho) { return expr.jet2(rho); }

}  // namespace surfq
