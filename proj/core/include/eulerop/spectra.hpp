#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eulerop/eulersolve.hpp"

namespace eulerop::spectra {

/// Symbol of the energy parameter.
Symbol energy_symbol();

// ---------------------------------------------------------------------------
// Real roots of univariate rational polynomials

/// Coefficients in ascending powers.
using UPoly = std::vector<Rational>;

struct RealRoot {
  std::optional<Rational> exact;
  Rational lo, hi;  // isolating interval, lo < root <= hi (lo == hi when exact)
  double approx = 0;
};

/// All distinct real roots in ascending order. Rational roots are found
/// exactly; the others are isolated with a Sturm sequence and bisected to
/// the given width.
std::vector<RealRoot> real_roots(const UPoly& p, const Rational& width = Rational(1, 1000000000000));

/// Value of p at a rational point.
Rational eval(const UPoly& p, const Rational& x);

/// Univariate polynomial in `var` with constant coefficients; throws
/// InvalidArgument if another parameter occurs.
UPoly to_upoly(const MPoly& p, Symbol var);

// ---------------------------------------------------------------------------
// Harmonic oscillator

struct HarmonicReport {
  solve::SeriesSolution series;  // symbolic E, [D(D-1) + x^2(2E - x^2)] y = 0
  bool matches_at_half = false;   // E = 1/2 reproduces exp(-x^2/2)
  std::optional<long> first_mismatch;
  RatFun wrong_energy;  // 3/2
  RatFun x4_at_wrong;   // series coefficient at the wrong energy
  RatFun x4_gaussian;   // coefficient of exp(-E x^2) at the wrong energy
  bool deviates_at_wrong = false;
};

/// cutoff: even, >= 4.
HarmonicReport harmonic_quantization_check(long cutoff);

// ---------------------------------------------------------------------------
// QES sextic oscillator  [-d^2 + alpha x^2 + gamma x^6] psi = E psi

struct QESEigen {
  Rational energy;
  LaurentPoly psi;  // polynomial part, psi = exp(-b x^4) * psi
  LaurentPoly residual;
};

struct QESResult {
  long n = 0;
  Rational gamma, g, alpha, b;  // g = sqrt(gamma), 16 b^2 = gamma
  DiffOp equation;              // x^2-multiplied gauged operator, symbolic E
  solve::SeriesSolution series;
  MPoly energy_polynomial;  // in E
  bool higher_vanish = false;  // coefficients above x^{n+2} share the roots
  std::vector<RealRoot> energies;
  std::vector<QESEigen> eigen;  // one per exact energy
};

/// Gauged operator -d^2 + 2g x^3 d + (alpha + 3g) x^2 - E at fixed energy.
DiffOp qes_operator(const Rational& g, const Rational& alpha, const RatFun& energy);

/// n even >= 0, gamma a positive rational square, cutoff >= n + 2.
QESResult qes_sextic(long n, const Rational& gamma, long cutoff);

// ---------------------------------------------------------------------------
// Anharmonic oscillator  [-d^2 + alpha x^2 + beta x^4 - E] psi = 0

struct AnharmonicResult {
  RatFun alpha, beta;
  solve::SeriesSolution series;  // symbolic E
  RatFun c2, c4, c6;             // series coefficients
  RatFun mu, nu;                 // trial exp(-mu x^2 - nu x^4)
  std::vector<RatFun> cubic;     // monic in E, ascending powers
  bool cubic_matches = false;    // equals E^3 - alpha E - 3 beta / 2
  // Numeric part, only when alpha and beta are numbers.
  std::optional<Rational> exact_e0;
  std::optional<double> e0;
  std::optional<double> cubic_residual;
  bool closed_form_used = false;
  std::optional<double> oracle_e0;
};

/// Throws MatchingInconsistent if the derived cubic differs from the
/// expected one.
AnharmonicResult anharmonic_ground(const RatFun& alpha, const RatFun& beta, long cutoff,
                                   bool with_oracle = false);

/// Closed form E = 2^{1/3} alpha / A + A / (3 * 2^{1/3}),
/// A = [40.5 beta + (1640.25 beta^2 - 108 alpha^3)^{1/2}]^{1/3}, taken on the
/// principal complex branch when the radicand is negative (the result is then
/// the largest of three real roots). nullopt when A = 0.
std::optional<double> cubic_closed_form(double alpha, double beta);

/// Lowest eigenvalue of -d^2 + alpha x^2 + beta x^4 from a finite-difference
/// grid on [-half_width, half_width].
double fd_ground_state(double alpha, double beta, double half_width = 10.0, int points = 2001);

}  // namespace eulerop::spectra
