#pragma once

#include <map>
#include <optional>
#include <string>

#include "eulerop/mpoly.hpp"

namespace eulerop {

/// Element of Q(parameters) in canonical form: numerator and denominator
/// share no common factor, and the denominator is monic in print order.
/// Structural equality is therefore mathematical equality.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(long c) : num_(c), den_(1) {}                // NOLINT(google-explicit-constructor)
  RatFun(const Rational& c) : num_(c), den_(1) {}     // NOLINT(google-explicit-constructor)
  RatFun(const MPoly& p) : num_(p), den_(1) {}        // NOLINT(google-explicit-constructor)
  static RatFun parameter(Symbol s) { return RatFun(MPoly::variable(s)); }
  static RatFun parameter(std::string_view name) { return parameter(Symbol::intern(name)); }

  const MPoly& numerator() const noexcept { return num_; }
  const MPoly& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const { return den_.is_constant() && num_ == MPoly(1); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  // Exact rational value; only meaningful when is_constant().
  Rational constant_value() const { return num_.constant_term(); }
  std::optional<long> as_integer() const;
  std::set<std::uint32_t> variables() const;

  RatFun inverse() const;
  RatFun pow(int e) const;

  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);

  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend RatFun operator-(const RatFun& a);
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Canonical string: integer-coefficient numerator over integer-coefficient
  /// denominator, e.g. "(2*beta)/(beta + 1)", "-1/48", "E^2 - 16".
  std::string str() const;

  friend RatFun normalize(const MPoly& num, const MPoly& den);

 private:
  MPoly num_;
  MPoly den_;
};

/// Canonical reduced form of num/den. Throws ZeroDenominator when den == 0.
RatFun normalize(const MPoly& num, const MPoly& den);

/// Canonical string, parenthesised when it is a sum so that it can be
/// followed by '*'.
std::string coefficient_factor(const RatFun& c);

/// The first printed numerator term has a negative coefficient.
bool leading_negative(const RatFun& c);

/// Substitute parameters; unbound parameters stay symbolic.
/// Throws EvaluationPole when the denominator vanishes.
RatFun evaluate(const RatFun& f, const std::map<Symbol, Rational>& bindings);

/// General substitution of parameters by rational functions.
RatFun substitute(const RatFun& f, const std::map<Symbol, RatFun>& values);

/// Integer-coefficient forms (numerator, denominator) used for printing:
/// jointly primitive, positive leading denominator coefficient.
std::pair<MPoly, MPoly> integer_form(const RatFun& f);

}  // namespace eulerop
