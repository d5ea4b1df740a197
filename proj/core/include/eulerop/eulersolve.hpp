#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulerop/diffop.hpp"

namespace eulerop::solve {

/// Polynomial in the Euler operator D = x d/dx with RatFun coefficients,
/// coefficient index = power of D.
class DPoly {
 public:
  DPoly() = default;
  explicit DPoly(std::vector<RatFun> coeffs);
  // (D - r)
  static DPoly linear_root(const RatFun& r);
  static DPoly constant(const RatFun& c) { return DPoly({c}); }

  const std::vector<RatFun>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  RatFun operator()(const RatFun& k) const;
  RatFun operator()(long k) const { return (*this)(RatFun(k)); }

  DPoly evaluated(const std::map<Symbol, Rational>& bindings) const;

  friend DPoly operator*(const DPoly& a, const DPoly& b);
  friend DPoly operator+(const DPoly& a, const DPoly& b);
  friend bool operator==(const DPoly& a, const DPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Expansion as a normal-ordered operator (D^m via Stirling numbers).
  DiffOp to_diffop() const;

 private:
  void trim();
  std::vector<RatFun> coeffs_;
};

/// Reads an Euler-degree-zero operator (combinations of x^k d^k) as a
/// polynomial in D. Throws InvalidEquation if some term has nonzero degree.
DPoly to_dpoly(const DiffOp& op);

/// Degree-zero graded part of a raw equation and the remainder.
struct Split {
  DPoly f;
  DiffOp p;
};
Split split_equation(const DiffOp& equation);

/// [F(D) + P(x, d/dx)] y = 0 with P free of degree-zero parts.
class EulerEquation {
 public:
  EulerEquation(DPoly f, DiffOp p);
  static EulerEquation from_operator(const DiffOp& equation);

  const DPoly& f() const noexcept { return f_; }
  const DiffOp& p() const noexcept { return p_; }
  DiffOp full_operator() const { return f_.to_diffop() + p_; }

 private:
  DPoly f_;
  DiffOp p_;
};

struct IndicialRoots {
  std::vector<long> integer;       // ascending
  std::vector<RatFun> symbolic;    // roots that are not integer constants
  std::optional<DPoly> unresolved; // factor left after peeling known roots
};

/// Roots of F(k) = 0: integer constants first, then symbolic roots read off
/// linear and square-discriminant quadratic factors.
IndicialRoots indicial_roots(const DPoly& f);

/// c x^k -> c / F(k) x^k. Throws ResonanceError(k) when F(k) = 0.
LaurentPoly invert_f_on(const DPoly& f, const LaurentPoly& p);

struct SeriesSolution {
  long lambda = 0;
  LaurentPoly body;
  long cutoff = 0;
  bool terminated = false;
  // lowest degree at which a residual may survive truncation
  long residual_degree = 0;
};

/// y = sum_m (-1)^m [F^{-1} P]^m x^lambda. For raising P the cutoff is the
/// largest kept degree; for lowering P the series is kept down to -cutoff
/// and normally terminates on its own. P with both raising and lowering
/// parts is rejected (InvalidEquation).
SeriesSolution series_solve(const EulerEquation& eq, long lambda, long cutoff);

/// sum_m (1/m!) [G(D)^{-1} A]^m p: the exponential forms whose prefactor
/// 1/G(D) is applied after each application of A. G = 1 gives exp_apply.
ExpApplyResult graded_exp_apply(const DiffOp& a, const DPoly& g, const LaurentPoly& p,
                                std::optional<int> cutoff = std::nullopt);

/// Residual (F + P) y.
LaurentPoly residual(const EulerEquation& eq, const LaurentPoly& y);

}  // namespace eulerop::solve
