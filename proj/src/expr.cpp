#include "proxim/expr.hpp"

namespace proxim::bounds {

std::string_view symbol_name(Symbol s) {
  switch (s) {
  case Symbol::n: return "n";
  case Symbol::delta: return "delta";
  case Symbol::proximity: return "pi";
  case Symbol::remoteness: return "rho";
  case Symbol::diameter: return "diam";
  case Symbol::radius: return "rad";
  case Symbol::min_ball2: return "minN2";
  }
  return "?";
}

Rational Bindings::get(Symbol s) const {
  switch (s) {
  case Symbol::n: return n;
  case Symbol::delta: return delta;
  case Symbol::proximity: return proximity;
  case Symbol::remoteness: return remoteness;
  case Symbol::diameter: return diameter;
  case Symbol::radius: return radius;
  case Symbol::min_ball2: return min_ball2;
  }
  return {};
}

struct Expr::Binary {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
};

struct Expr::Unary {
  UnaryOp op;
  Expr arg;
};

struct Expr::Parity {
  Expr odd;
  Expr even;
};

Expr::Expr(Rational constant) : node_(std::make_shared<const Node>(constant)) {}
Expr::Expr(Symbol symbol) : node_(std::make_shared<const Node>(symbol)) {}

Expr Expr::binary(BinaryOp op, Expr a, Expr b) {
  return Expr(std::make_shared<const Node>(Binary{op, std::move(a), std::move(b)}));
}

Expr Expr::floor_of(Expr e) { return Expr(std::make_shared<const Node>(Unary{UnaryOp::floor, std::move(e)})); }
Expr Expr::ceil_of(Expr e) { return Expr(std::make_shared<const Node>(Unary{UnaryOp::ceil, std::move(e)})); }
Expr Expr::by_parity_of_n(Expr odd, Expr even) {
  return Expr(std::make_shared<const Node>(Parity{std::move(odd), std::move(even)}));
}

Expr operator+(Expr a, Expr b) { return Expr::binary(Expr::BinaryOp::add, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::binary(Expr::BinaryOp::sub, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::binary(Expr::BinaryOp::mul, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return Expr::binary(Expr::BinaryOp::div, std::move(a), std::move(b)); }

Rational Expr::evaluate(const Bindings& b) const {
  return std::visit(
      [&](const auto& node) -> Rational {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return node;
        } else if constexpr (std::is_same_v<T, Symbol>) {
          return b.get(node);
        } else if constexpr (std::is_same_v<T, Binary>) {
          const Rational l = node.lhs.evaluate(b);
          const Rational r = node.rhs.evaluate(b);
          switch (node.op) {
          case BinaryOp::add: return l + r;
          case BinaryOp::sub: return l - r;
          case BinaryOp::mul: return l * r;
          case BinaryOp::div: return l / r;
          }
          return {};
        } else if constexpr (std::is_same_v<T, Unary>) {
          const Rational a = node.arg.evaluate(b);
          return node.op == UnaryOp::floor ? Rational(a.floor()) : Rational(a.ceil());
        } else {
          const Rational n = b.get(Symbol::n);
          if (!n.is_integer()) return node.even.evaluate(b);
          return n.numerator() % 2 != 0 ? node.odd.evaluate(b) : node.even.evaluate(b);
        }
      },
      *node_);
}

namespace {

int precedence_of(Expr::BinaryOp op) {
  return op == Expr::BinaryOp::add || op == Expr::BinaryOp::sub ? 1 : 2;
}

} // namespace

std::string Expr::str() const {
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Rational>) {
          return node.is_integer() ? node.str() : "(" + node.str() + ")";
        } else if constexpr (std::is_same_v<T, Symbol>) {
          return std::string(symbol_name(node));
        } else if constexpr (std::is_same_v<T, Binary>) {
          const int prec = precedence_of(node.op);
          auto wrap = [&](const Expr& child, bool right) {
            std::string s = child.str();
            if (const auto* bin = std::get_if<Binary>(child.node_.get())) {
              const int cp = precedence_of(bin->op);
              const bool tighter_needed = right && (node.op == BinaryOp::sub || node.op == BinaryOp::div);
              if (cp < prec || (cp == prec && tighter_needed)) s = "(" + s + ")";
            }
            return s;
          };
          static constexpr const char* ops[] = {" + ", " - ", "*", "/"};
          return wrap(node.lhs, false) + ops[static_cast<int>(node.op)] + wrap(node.rhs, true);
        } else if constexpr (std::is_same_v<T, Unary>) {
          return (node.op == UnaryOp::floor ? "floor(" : "ceil(") + node.arg.str() + ")";
        } else {
          return "[n odd: " + node.odd.str() + "; n even: " + node.even.str() + "]";
        }
      },
      *node_);
}

} // namespace proxim::bounds
