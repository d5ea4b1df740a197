#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eulerop {

enum class ErrorKind {
  ZeroDenominator,
  EvaluationPole,
  UnknownParameter,
  SyntaxError,
  NonTerminatingBCH,
  TruncationRequired,
  ResonanceError,
  NotAnIndicialRoot,
  InvalidEquation,
  UnknownFamily,
  NoPolynomialSolution,
  MatchingInconsistent,
  TooManyParts,
  DivisionRemainder,
  DegenerateDenominator,
  NoConvergence,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// True for kinds caused by malformed input (usage, grammar, names) rather
// than by the mathematics of a well-formed request.
bool is_usage_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ResonanceError : public Error {
 public:
  explicit ResonanceError(long degree)
      : Error(ErrorKind::ResonanceError,
              "F(D) vanishes on x^" + std::to_string(degree)),
        degree_(degree) {}

  long degree() const noexcept { return degree_; }

 private:
  long degree_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " +
                                          std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace eulerop
