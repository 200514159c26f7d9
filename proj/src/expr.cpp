#include "effradius/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace effradius {

namespace {

ExprPtr make_node(std::variant<ExprNode::Number, ExprNode::Var, ExprNode::Neg,
                               ExprNode::Binary, ExprNode::Call> v) {
  return std::make_shared<const ExprNode>(ExprNode{std::move(v)});
}

struct Parser {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  // Position of the next token (for error reporting).
  std::size_t cursor() {
    skip_ws();
    return pos;
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, at);
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    for (;;) {
      if (consume('+'))
        lhs = make_node(ExprNode::Binary{BinaryOp::Add, std::move(lhs), parse_term()});
      else if (consume('-'))
        lhs = make_node(ExprNode::Binary{BinaryOp::Sub, std::move(lhs), parse_term()});
      else
        return lhs;
    }
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    for (;;) {
      if (consume('*'))
        lhs = make_node(ExprNode::Binary{BinaryOp::Mul, std::move(lhs), parse_factor()});
      else if (consume('/'))
        lhs = make_node(ExprNode::Binary{BinaryOp::Div, std::move(lhs), parse_factor()});
      else
        return lhs;
    }
  }

  ExprPtr parse_factor() {
    if (consume('-')) return make_node(ExprNode::Neg{parse_factor()});
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    const std::size_t caret = cursor();
    if (!consume('^')) return base;
    ExprPtr expo = parse_factor();  // right-associative, allows 2^-3
    if (depends_on_x(*expo))
      fail("exponent must be a constant expression", caret);
    if (depends_on_x(*base)) {
      double e;
      try {
        e = eval_ast(*expo, 0.0);
      } catch (const DomainError& d) {
        fail(std::string("invalid constant exponent: ") + d.what(), caret);
      }
      if (std::nearbyint(e) != e)
        fail("non-integer exponent requires a constant base", caret);
      if (std::abs(e) > 1e15) fail("integer exponent too large", caret);
    }
    return make_node(ExprNode::Binary{BinaryOp::Pow, std::move(base), std::move(expo)});
  }

  ExprPtr parse_atom() {
    const std::size_t at = cursor();
    if (at >= src.size()) fail("unexpected end of expression", at);
    const char c = src[at];

    if (c == '(') {
      ++pos;
      ExprPtr inner = parse_expr();
      if (!consume(')')) fail("expected ')'", cursor());
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number(at);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name(at);
    fail(std::string("unexpected character '") + c + "'", at);
  }

  ExprPtr parse_number(std::size_t at) {
    double value = 0.0;
    const auto res = std::from_chars(src.data() + at, src.data() + src.size(), value);
    if (res.ec != std::errc{}) fail("malformed number", at);
    pos = static_cast<std::size_t>(res.ptr - src.data());
    return make_node(ExprNode::Number{value});
  }

  ExprPtr parse_name(std::size_t at) {
    std::size_t end = at;
    while (end < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_'))
      ++end;
    const std::string_view name = src.substr(at, end - at);
    pos = end;

    if (name == "x") return make_node(ExprNode::Var{});
    if (name == "pi") return make_node(ExprNode::Number{std::numbers::pi});
    if (name == "e") return make_node(ExprNode::Number{std::numbers::e});

    FuncId fn;
    if (name == "sin") fn = FuncId::Sin;
    else if (name == "cos") fn = FuncId::Cos;
    else if (name == "tan") fn = FuncId::Tan;
    else if (name == "exp") fn = FuncId::Exp;
    else if (name == "ln") fn = FuncId::Ln;
    else if (name == "sqrt") fn = FuncId::Sqrt;
    else fail("unknown identifier '" + std::string(name) + "'", at);

    if (!consume('(')) fail("expected '(' after function name", cursor());
    ExprPtr arg = parse_expr();
    if (!consume(')')) fail("expected ')'", cursor());
    return make_node(ExprNode::Call{fn, std::move(arg)});
  }
};

}  // namespace

Expression parse_expression(std::string_view text) {
  Parser p{text};
  if (p.cursor() >= text.size()) throw ParseError("empty expression", 0);
  ExprPtr root = p.parse_expr();
  if (p.cursor() < text.size())
    p.fail("unexpected trailing input", p.cursor());
  return Expression(std::move(root), std::string(text));
}

bool depends_on_x(const ExprNode& n) {
  return std::visit(
      detail::Overloaded{
          [](const ExprNode::Number&) { return false; },
          [](const ExprNode::Var&) { return true; },
          [](const ExprNode::Neg& u) { return depends_on_x(*u.arg); },
          [](const ExprNode::Binary& b) {
            return depends_on_x(*b.lhs) || depends_on_x(*b.rhs);
          },
          [](const ExprNode::Call& c) { return depends_on_x(*c.arg); }},
      n.node);
}

double checked_pow(double base, double expo) {
  const bool integral = std::nearbyint(expo) == expo;
  if (!integral && base < 0.0)
    throw DomainError("negative base with non-integer exponent");
  if (base == 0.0 && expo < 0.0)
    throw DomainError("zero base with negative exponent");
  return std::pow(base, expo);
}

double eval_ast(const ExprNode& n, double x) {
  return eval_node(n, DoubleBackend{x});
}

double eval_ast(const Expression& e, double x) {
  const double v = eval_ast(e.root(), x);
  if (!std::isfinite(v))
    throw DomainError("evaluation produced a non-finite value at x = " + std::to_string(x));
  return v;
}

}  // namespace effradius
