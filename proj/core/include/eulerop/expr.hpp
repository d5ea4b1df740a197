#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "eulerop/diffop.hpp"
#include "eulerop/symbol.hpp"

namespace eulerop {

/// Syntax tree of an operator expression.
///
///   expr   := term (('+' | '-') term)*
///   term   := signed (('*' | '/') signed)*
///   signed := '-' signed | factor
///   factor := atom ('^' uint)?
///   atom   := 'x' | 'd' | 'D' | uint | ident | '(' expr ')'
///
/// '*' composes operators. 'a / b' requires b to be a nonzero scalar or a
/// single power of x and means b^{-1} a.
struct OpExpr {
  enum class Kind { X, Deriv, Euler, Number, Param, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Number;
  Integer number;        // Number
  std::string name;      // Param
  unsigned exponent = 0; // Pow
  std::vector<OpExpr> args;
  std::size_t line = 1, column = 1;

  // Structural equality, positions ignored.
  friend bool operator==(const OpExpr& a, const OpExpr& b);
};

inline constexpr unsigned kMaxExponent = 256;

/// Throws SyntaxError with the position of the first offending token.
OpExpr parse_expr(std::string_view src);

/// Throws UnknownParameter for undeclared identifiers, ZeroDenominator for
/// division by zero, SyntaxError for an unsupported divisor.
DiffOp lower(const OpExpr& e, const ParamSet& params);

DiffOp parse_operator(std::string_view src, const ParamSet& params);

/// Parses a scalar expression (no x, d or D).
RatFun parse_scalar(std::string_view src, const ParamSet& params);

/// Every identifier used in e.
ParamSet identifiers(const OpExpr& e);

/// Minimal-parenthesis rendering; parse_expr(print(e)) == e.
std::string print(const OpExpr& e);

/// Canonical rendering of a normal-ordered operator in the grammar above,
/// terms by decreasing derivative order, then decreasing x power.
std::string to_string(const DiffOp& op);

}  // namespace eulerop
