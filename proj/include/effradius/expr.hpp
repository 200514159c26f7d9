#pragma once

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "effradius/errors.hpp"

namespace effradius {

enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class FuncId { Sin, Cos, Tan, Exp, Ln, Sqrt };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  struct Number {  // literal; the named constants pi and e fold to this
    double value;
  };
  struct Var {};
  struct Neg {
    ExprPtr arg;
  };
  struct Binary {
    BinaryOp op;
    ExprPtr lhs;
    ExprPtr rhs;
  };
  struct Call {
    FuncId fn;
    ExprPtr arg;
  };

  std::variant<Number, Var, Neg, Binary, Call> node;
};

// Parsed closed-form expression in the single variable x.
class Expression {
 public:
  Expression(ExprPtr root, std::string text)
      : root_(std::move(root)), text_(std::move(text)) {}

  const ExprNode& root() const { return *root_; }
  const std::string& text() const { return text_; }

 private:
  ExprPtr root_;
  std::string text_;
};

// Recursive-descent parser for
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | power
//   power  := atom ('^' factor)?          // right-associative
//   atom   := number | 'x' | 'pi' | 'e' | name '(' expr ')' | '(' expr ')'
// with functions sin, cos, tan, exp, ln, sqrt. Implicit multiplication is
// rejected. Exponents must be x-free subexpressions, and a non-integer
// exponent additionally requires an x-free base. Throws ParseError.
Expression parse_expression(std::string_view text);

bool depends_on_x(const ExprNode& n);

// Point evaluation in doubles with real-domain checks (division by zero,
// ln/sqrt outside their domains, invalid powers, overflow to non-finite).
// Throws DomainError.
double eval_ast(const Expression& e, double x);
double eval_ast(const ExprNode& n, double x);

// std::pow with the real-domain checks above.
double checked_pow(double base, double expo);

namespace detail {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace detail

// The tree walk is generic over a numeric backend so the same code yields
// point values (DoubleBackend) or truncated series (the Taylor engine).
// A backend supplies the value type, constant injection, the value of x,
// and the domain-checked elementary operations.
template <class Backend>
typename Backend::value_type eval_node(const ExprNode& n, const Backend& bk) {
  using T = typename Backend::value_type;
  return std::visit(
      detail::Overloaded{
          [&](const ExprNode::Number& c) -> T { return bk.constant(c.value); },
          [&](const ExprNode::Var&) -> T { return bk.variable(); },
          [&](const ExprNode::Neg& u) -> T { return -eval_node(*u.arg, bk); },
          [&](const ExprNode::Binary& b) -> T {
            if (b.op == BinaryOp::Pow) {
              // The parser guarantees an x-free exponent; fold it to a double.
              const double expo = eval_ast(*b.rhs, 0.0);
              return bk.pow(eval_node(*b.lhs, bk), expo);
            }
            T lhs = eval_node(*b.lhs, bk);
            T rhs = eval_node(*b.rhs, bk);
            switch (b.op) {
              case BinaryOp::Add: return lhs + rhs;
              case BinaryOp::Sub: return lhs - rhs;
              case BinaryOp::Mul: return lhs * rhs;
              case BinaryOp::Div: return bk.div(lhs, rhs);
              case BinaryOp::Pow: break;
            }
            throw std::logic_error("unreachable binary op");
          },
          [&](const ExprNode::Call& c) -> T {
            T arg = eval_node(*c.arg, bk);
            switch (c.fn) {
              case FuncId::Sin: return bk.sin(arg);
              case FuncId::Cos: return bk.cos(arg);
              case FuncId::Tan: return bk.tan(arg);
              case FuncId::Exp: return bk.exp(arg);
              case FuncId::Ln: return bk.ln(arg);
              case FuncId::Sqrt: return bk.sqrt(arg);
            }
            throw std::logic_error("unreachable function id");
          }},
      n.node);
}

struct DoubleBackend {
  using value_type = double;
  double x;

  double constant(double v) const { return v; }
  double variable() const { return x; }
  double div(double a, double b) const {
    if (b == 0.0) throw DomainError("division by zero");
    return a / b;
  }
  double pow(double base, double expo) const { return checked_pow(base, expo); }
  double sin(double v) const { return std::sin(v); }
  double cos(double v) const { return std::cos(v); }
  double tan(double v) const { return std::tan(v); }
  double exp(double v) const { return std::exp(v); }
  double ln(double v) const {
    if (v <= 0.0) throw DomainError("ln of a non-positive value");
    return std::log(v);
  }
  double sqrt(double v) const {
    if (v < 0.0) throw DomainError("sqrt of a negative value");
    return std::sqrt(v);
  }
};

}  // namespace effradius
