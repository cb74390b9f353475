#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>

namespace berndual {

/// Parsed arithmetic expression over x and y0..y9, where yk stands for the
/// k-th derivative argument of a right-hand side f(x, y, y', ...).
///
/// Grammar (whitespace is ignored between tokens):
///
///   expr    = term { ("+" | "-") term } ;
///   term    = unary { ("*" | "/") unary } ;
///   unary   = "-" unary | power ;
///   power   = primary [ "^" unary ] ;            (right-associative)
///   primary = number | "x" | "y" digit
///           | func "(" expr ")" | "(" expr ")" ;
///   func    = "sin" | "cos" | "tan" | "sec" | "exp" | "ln" | "sqrt" | "abs" ;
///   number  = digits [ "." digits ] [ ("e" | "E") [ "+" | "-" ] digits ]
///           | "." digits [ exponent ] ;
///
/// So -2^2 is -(2^2) and 2^-1 is 2^(-1). There is no implicit
/// multiplication: "2x" is a syntax error.
///
/// Trees are immutable and cheap to copy (shared nodes).
class Expr {
public:
  struct Node;

  explicit Expr(std::shared_ptr<const Node> root);

  /// Throws EvaluationError on a domain error (division by zero, ln of a
  /// non-positive number, sqrt of a negative number, sec at a zero of cos,
  /// negative base with non-integer exponent) and ArgumentError when the
  /// expression refers to yk with k >= args.size().
  double evaluate(double x, std::span<const double> args) const;

  /// Largest k referenced as yk, or -1 if the expression uses no y.
  int max_variable_index() const;

  /// Fully parenthesized text that parses back to an equal tree.
  std::string print() const;

  friend bool operator==(const Expr& a, const Expr& b);

private:
  std::shared_ptr<const Node> root_;
};

/// Throws ParseError with the byte offset of the problem.
Expr parse(std::string_view source);

}  // namespace berndual
