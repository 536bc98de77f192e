#pragma once

#include <memory>
#include <string>
#include <variant>

#include "proxim/rational.hpp"

namespace proxim::bounds {

/// Named invariants an expression may refer to.
enum class Symbol { n, delta, proximity, remoteness, diameter, radius, min_ball2 };

std::string_view symbol_name(Symbol s);

/// Values bound to every Symbol for one graph.
struct Bindings {
  Rational n;
  Rational delta;
  Rational proximity;
  Rational remoteness;
  Rational diameter;
  Rational radius;
  Rational min_ball2;

  Rational get(Symbol s) const;
};

/// Immutable arithmetic expression over exact rationals. Leaves are
/// constants or symbols; inner nodes are + - * /, floor, ceil and a
/// selection on the parity of n.
class Expr {
public:
  enum class BinaryOp { add, sub, mul, div };
  enum class UnaryOp { floor, ceil };

  Expr(Rational constant); // NOLINT: numeric literals lift into expressions
  Expr(std::int64_t constant) : Expr(Rational(constant)) {} // NOLINT
  Expr(Symbol symbol); // NOLINT

  static Expr fraction(std::int64_t num, std::int64_t den) { return Expr(Rational(num, den)); }
  static Expr floor_of(Expr e);
  static Expr ceil_of(Expr e);
  /// `odd` when n is odd, `even` otherwise.
  static Expr by_parity_of_n(Expr odd, Expr even);

  Rational evaluate(const Bindings& b) const;
  std::string str() const;

  friend Expr operator+(Expr a, Expr b);
  friend Expr operator-(Expr a, Expr b);
  friend Expr operator*(Expr a, Expr b);
  friend Expr operator/(Expr a, Expr b);

private:
  struct Binary;
  struct Unary;
  struct Parity;
  using Node = std::variant<Rational, Symbol, Binary, Unary, Parity>;

  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr binary(BinaryOp op, Expr a, Expr b);

  std::shared_ptr<const Node> node_;
};

} // namespace proxim::bounds
