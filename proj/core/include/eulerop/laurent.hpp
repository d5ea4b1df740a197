#pragma once

#include <map>
#include <string>

#include "eulerop/ratfun.hpp"

namespace eulerop {

/// Finite sum of c*x^k with integer k and RatFun coefficients.
class LaurentPoly {
 public:
  using Terms = std::map<long, RatFun>;

  LaurentPoly() = default;
  LaurentPoly(const RatFun& c);  // NOLINT(google-explicit-constructor)
  static LaurentPoly monomial(long k, const RatFun& c = RatFun(1));

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // Highest / lowest exponent; callers must check is_zero() first.
  long degree() const { return terms_.rbegin()->first; }
  long valuation() const { return terms_.begin()->first; }
  RatFun coeff(long k) const;
  bool is_polynomial() const { return is_zero() || valuation() >= 0; }

  void add_term(long k, const RatFun& c);

  // Keep only exponents in [lo, hi].
  LaurentPoly truncated(long lo, long hi) const;
  LaurentPoly evaluated(const std::map<Symbol, Rational>& bindings) const;
  LaurentPoly substituted(const std::map<Symbol, RatFun>& values) const;
  // p(-x)
  LaurentPoly reflected() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const RatFun& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const RatFun& c) { return a *= c; }
  friend LaurentPoly operator*(const RatFun& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a) { return a * RatFun(-1); }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// "8*x^3 - 12*x" style rendering with canonical coefficient strings.
std::string to_string(const LaurentPoly& p, const std::string& var = "x");

}  // namespace eulerop
