#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eulerop/eulersolve.hpp"

namespace eulerop::families {

enum class Family {
  Hermite,
  Laguerre,
  Legendre,
  Gegenbauer,
  Chebyshev1,
  Chebyshev2,
  Bessel,
  ConfluentHG,
  Hypergeometric,
};

const std::vector<Family>& all_families();
std::string_view name(Family f);
// Throws UnknownFamily.
Family family_from_name(std::string_view name);
// Parameter names the family reads (alpha, lambda, gamma, nu).
std::vector<std::string> parameters(Family f);

/// Parameter values; parameters missing here stay symbolic.
using Bindings = std::map<Symbol, RatFun>;

/// Exponential form C_n * sum_m (1/m!) [G(D)^{-1} A]^m x^carrier for one
/// member of a family.
struct FamilySpec {
  Family family;
  long n = 0;
  DiffOp a_op;
  solve::DPoly g;  // constant 1 when the row has no graded prefactor
  long carrier = 0;
  RatFun normalization;
  std::optional<int> cutoff;  // highest power of A kept (Bessel only)
  DiffOp equation;            // differential operator whose kernel holds the member
};

struct Options {
  // Hypergeometric: use x^{-alpha} (alpha = -n) with 1/(D + beta) instead
  // of x^{-beta} (beta = -n) with 1/(D + alpha).
  bool swap_hypergeometric = false;
};

FamilySpec make_spec(Family f, long n, const Bindings& b = {}, const Options& opt = {});

/// Degree-n member. For Bessel the result is the ascending series of J_nu
/// up to degree nu + 2n.
LaurentPoly generate(const FamilySpec& spec);
LaurentPoly generate(Family f, long n, const Bindings& b = {}, const Options& opt = {});

struct DEReport {
  LaurentPoly member;
  LaurentPoly residual;
  bool ok = false;
  // Bessel: residual may only live above this degree.
  std::optional<long> allowed_above;
};

DEReport verify_de(const FamilySpec& spec);
DEReport verify_de(Family f, long n, const Bindings& b = {}, const Options& opt = {});

// ---------------------------------------------------------------------------
// Ladder operators

enum class LadderKind {
  HermiteRaise,
  HermiteLower,
  OscillatorRaise,
  OscillatorLower,
  LaguerreRaise,
  LaguerreLower,
  LaguerreAlphaShift,
  CoulombRaise,
  CoulombLower,
};

const std::vector<LadderKind>& all_ladders();
std::string_view name(LadderKind k);
LadderKind ladder_from_name(std::string_view name);

/// Symbol used for the level index inside ladder factors.
Symbol level_symbol();

struct LadderIdentity {
  LadderKind kind;
  DiffOp op;       // derived operator
  DiffOp printed;  // the operator as commonly written for this identity
  long shift_n = 0;
  long shift_alpha = 0;
  // Right-hand multiplier as a function of n. For the oscillator pair this
  // is the square of the multiplier, which is irrational.
  RatFun factor;
  bool factor_squared = false;
  // Wavefunction prefactor psi = G * polynomial, if any.
  std::optional<Gauge> gauge;
};

/// Builds the identity from the monomial-level operator by BCH conjugation
/// with the family's exponential form, then the gauge map for wavefunctions.
LadderIdentity build_ladder(LadderKind kind, int max_depth = kDefaultBchDepth);

struct LadderReport {
  bool ok = true;
  long checked = 0;
  std::optional<long> first_failure;
  std::string detail;
  bool printed_matches = false;  // derived operator equals the printed one
};

/// Checks op * member_n = factor(n) * member_{n+shift} for n = 0..n_max.
/// Oscillator and Coulomb identities are checked at the polynomial level
/// after conjugating the operator back through the gauge.
LadderReport verify_ladder(const LadderIdentity& id, long n_max);

/// Polynomial-level member of the family a ladder acts on (Hermite or
/// Laguerre; Coulomb uses alpha = 2l + 1).
LaurentPoly ladder_member(LadderKind kind, long n, long alpha_shift = 0);

}  // namespace eulerop::families
