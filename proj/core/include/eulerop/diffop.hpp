#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "eulerop/laurent.hpp"

namespace eulerop {

inline constexpr int kDefaultBchDepth = 64;

/// Normal-ordered Laurent differential operator: a finite sum of
/// c * x^a * d^b with every x-power to the left of every derivative.
/// A term x^a d^b has Euler degree a - b.
class DiffOp {
 public:
  struct Key {
    long x_power;
    long d_order;  // >= 0
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  using Terms = std::map<Key, RatFun>;

  DiffOp() = default;
  DiffOp(const RatFun& c);  // NOLINT(google-explicit-constructor)
  static DiffOp term(long x_power, long d_order, const RatFun& c = RatFun(1));
  static DiffOp x(long power = 1) { return term(power, 0); }
  static DiffOp d(long order = 1) { return term(0, order); }
  // D = x d
  static DiffOp euler() { return term(1, 1); }
  static DiffOp multiplication(const LaurentPoly& p);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  RatFun coeff(long x_power, long d_order) const;
  long order() const;

  // Sorted distinct Euler degrees present.
  std::vector<long> degrees() const;
  DiffOp homogeneous_part(long degree) const;
  // True when no term has a negative x-power (maps polynomials to polynomials).
  bool preserves_polynomials() const;
  // Order-zero operators are multiplication by a Laurent polynomial.
  std::optional<LaurentPoly> as_multiplier() const;

  DiffOp evaluated(const std::map<Symbol, Rational>& bindings) const;
  DiffOp substituted(const std::map<Symbol, RatFun>& values) const;

  void add_term(long x_power, long d_order, const RatFun& c);

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const RatFun& c);

  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const RatFun& c) { return a *= c; }
  friend DiffOp operator*(const RatFun& c, DiffOp a) { return a *= c; }
  // Composition, result normal ordered.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator-(const DiffOp& a) { return a * RatFun(-1); }
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.terms_ == b.terms_; }

  DiffOp pow(unsigned e) const;

 private:
  Terms terms_;
};

/// op applied to p; d x^k = k x^(k-1) for every integer k.
LaurentPoly apply(const DiffOp& op, const LaurentPoly& p);

/// ab - ba
DiffOp commutator(const DiffOp& a, const DiffOp& b);

/// e^{-a} b e^{a} = b + [b,a] + [[b,a],a]/2! + ..., summed until a nested
/// commutator vanishes. Throws NonTerminatingBCH if that does not happen
/// within max_depth commutators.
DiffOp conjugate(const DiffOp& a, const DiffOp& b, int max_depth = kDefaultBchDepth);

struct ExpApplyResult {
  LaurentPoly value;
  bool terminated = false;  // the series ended on an exact zero term
  int terms_used = 0;
};

/// sum_{m>=0} a^m p / m!. Without a cutoff the expansion must be guaranteed
/// to terminate (a strictly degree-lowering and polynomial-preserving, p a
/// polynomial), otherwise TruncationRequired. With a cutoff only the terms
/// a^m p / m! with m <= cutoff are summed.
ExpApplyResult exp_apply(const DiffOp& a, const LaurentPoly& p,
                         std::optional<int> cutoff = std::nullopt);

/// Non-polynomial factor G for similarity transforms: exp(c x^k) or x^l.
/// Composite gauges are products of these.
class Gauge {
 public:
  struct Factor {
    enum class Kind { Exponential, Power } kind;
    RatFun c;  // exponential: coefficient c; power: exponent l
    long k = 0;  // exponential only: power of x
  };

  static Gauge exponential(const RatFun& c, long k);
  static Gauge power(const RatFun& l);

  Gauge operator*(const Gauge& o) const;
  Gauge inverse() const;
  // G'/G as a Laurent polynomial.
  LaurentPoly log_derivative() const;
  const std::vector<Factor>& factors() const noexcept { return factors_; }

 private:
  std::vector<Factor> factors_;
};

/// G^{-1} op G, computed by d -> d + G'/G in each normal-ordered term.
DiffOp gauge_transform(const DiffOp& op, const Gauge& g);

}  // namespace eulerop
