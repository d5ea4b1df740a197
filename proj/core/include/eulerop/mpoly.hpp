#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "eulerop/symbol.hpp"

namespace eulerop {

using Integer = mpz_class;
using Rational = mpq_class;

/// Power product of parameters, stored as (symbol id, exponent) pairs sorted
/// by id with strictly positive exponents.
class Monomial {
 public:
  using Factor = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;
  static Monomial of(Symbol s, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  std::uint32_t degree_in(std::uint32_t id) const;
  std::uint32_t total_degree() const;

  Monomial operator*(const Monomial& other) const;
  // nullopt when other does not divide *this
  std::optional<Monomial> divide(const Monomial& other) const;
  Monomial without(std::uint32_t id) const;
  Monomial with_power(std::uint32_t id, std::uint32_t exponent) const;

  // Storage order; not a monomial order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded order with ties broken lexicographically by variable *name*.
/// Returns <0 when a precedes b (a is the larger monomial), 0 when equal.
int print_order_compare(const Monomial& a, const Monomial& b);

/// Sparse multivariate polynomial over the rationals.
class MPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c);             // NOLINT(google-explicit-constructor)
  static MPoly variable(Symbol s);
  static MPoly term(const Monomial& m, const Rational& c);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Value of the constant term (zero when absent).
  Rational constant_term() const;
  std::set<std::uint32_t> variables() const;
  std::uint32_t degree_in(std::uint32_t id) const;
  std::uint32_t total_degree() const;

  // Coefficients with respect to one variable, index = power.
  std::vector<MPoly> coefficients_in(std::uint32_t id) const;
  static MPoly from_coefficients(std::uint32_t id, const std::vector<MPoly>& coeffs);

  // Leading term under print_order_compare.
  std::pair<Monomial, Rational> leading_term() const;

  MPoly substitute(const std::map<std::uint32_t, Rational>& values) const;
  MPoly pow(unsigned e) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator-(const MPoly& a);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

/// Exact quotient a/b, or nullopt if b does not divide a.
std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b);

/// Greatest common divisor, normalised to leading coefficient 1 in print
/// order (zero only when both inputs are zero).
MPoly gcd(const MPoly& a, const MPoly& b);

/// Square root when p is a perfect square over Q, else nullopt.
std::optional<MPoly> sqrt(const MPoly& p);

/// Scale factor s such that s*p has coprime integer coefficients and a
/// positive leading coefficient (print order). p must be nonzero.
Rational integer_normaliser(const MPoly& p);

/// Human-readable rendering; coefficients are printed as given (integers
/// print bare, non-integers as p/q).
std::string to_string(const MPoly& p);

}  // namespace eulerop
