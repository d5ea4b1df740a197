#include "eulerop/families.hpp"

#include <array>

#include "eulerop/error.hpp"

namespace eulerop::families {

namespace {

using solve::DPoly;

RatFun param(const Bindings& b, std::string_view nm) {
  Symbol s = Symbol::intern(nm);
  auto it = b.find(s);
  return it == b.end() ? RatFun::parameter(s) : it->second;
}

Rational factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(out);
}

RatFun pochhammer(const RatFun& a, long n) {
  RatFun out(1);
  for (long j = 0; j < n; ++j) out *= a + RatFun(j);
  return out;
}

RatFun pow2(long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return RatFun(Rational(out));
}

// x d^2 + c d
DiffOp laguerre_b(const RatFun& c) { return DiffOp::term(1, 2) + DiffOp::d() * c; }

DiffOp from_roots(std::initializer_list<RatFun> roots) {
  DPoly p = DPoly::constant(RatFun(1));
  for (const auto& r : roots) p = p * DPoly::linear_root(r);
  return p.to_diffop();
}

long nonnegative_integer(const RatFun& v, std::string_view what) {
  auto k = v.as_integer();
  if (!k || *k < 0) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + " must be bound to a nonnegative integer");
  }
  return *k;
}

const std::array<std::pair<Family, std::string_view>, 9> kFamilyNames{{
    {Family::Hermite, "hermite"},
    {Family::Laguerre, "laguerre"},
    {Family::Legendre, "legendre"},
    {Family::Gegenbauer, "gegenbauer"},
    {Family::Chebyshev1, "chebyshev1"},
    {Family::Chebyshev2, "chebyshev2"},
    {Family::Bessel, "bessel"},
    {Family::ConfluentHG, "confluent_hg"},
    {Family::Hypergeometric, "hypergeometric"},
}};

const std::array<std::pair<LadderKind, std::string_view>, 9> kLadderNames{{
    {LadderKind::HermiteRaise, "hermite_raise"},
    {LadderKind::HermiteLower, "hermite_lower"},
    {LadderKind::OscillatorRaise, "oscillator_raise"},
    {LadderKind::OscillatorLower, "oscillator_lower"},
    {LadderKind::LaguerreRaise, "laguerre_raise"},
    {LadderKind::LaguerreLower, "laguerre_lower"},
    {LadderKind::LaguerreAlphaShift, "laguerre_alpha_shift"},
    {LadderKind::CoulombRaise, "coulomb_raise"},
    {LadderKind::CoulombLower, "coulomb_lower"},
}};

}  // namespace

const std::vector<Family>& all_families() {
  static const std::vector<Family> v = [] {
    std::vector<Family> out;
    for (const auto& [f, n] : kFamilyNames) out.push_back(f);
    return out;
  }();
  return v;
}

std::string_view name(Family f) {
  for (const auto& [k, n] : kFamilyNames) {
    if (k == f) return n;
  }
  return "?";
}

Family family_from_name(std::string_view nm) {
  for (const auto& [k, n] : kFamilyNames) {
    if (n == nm) return k;
  }
  throw Error(ErrorKind::UnknownFamily, "unknown family '" + std::string(nm) + "'");
}

std::vector<std::string> parameters(Family f) {
  switch (f) {
    case Family::Laguerre: return {"alpha"};
    case Family::Gegenbauer: return {"lambda"};
    case Family::Bessel: return {"nu"};
    case Family::ConfluentHG: return {"gamma"};
    case Family::Hypergeometric: return {"alpha", "beta", "gamma"};
    default: return {};
  }
}

FamilySpec make_spec(Family f, long n, const Bindings& b, const Options& opt) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  FamilySpec s{f, n, {}, DPoly::constant(RatFun(1)), n, RatFun(1), std::nullopt, {}};
  const RatFun rn(n);
  const DiffOp d2 = DiffOp::d(2);
  switch (f) {
    case Family::Hermite:
      s.a_op = d2 * RatFun(Rational(-1, 4));
      s.normalization = pow2(n);
      s.equation = DiffOp::euler() - DiffOp(rn) - d2 * RatFun(Rational(1, 2));
      break;
    case Family::Laguerre: {
      DiffOp bop = laguerre_b(param(b, "alpha") + RatFun(1));
      s.a_op = -bop;
      s.normalization = RatFun(Rational(n % 2 == 0 ? 1 : -1) / factorial(n));
      s.equation = DiffOp::euler() - DiffOp(rn) - bop;
      break;
    }
    case Family::Legendre:
      s.a_op = d2 * RatFun(Rational(-1, 2));
      s.g = DPoly::linear_root(RatFun(-n - 1));
      s.normalization = RatFun(factorial(2 * n) / (factorial(n) * factorial(n))) / pow2(n);
      s.equation = from_roots({rn, RatFun(-n - 1)}) - d2;
      break;
    case Family::Gegenbauer: {
      RatFun lam = param(b, "lambda");
      s.a_op = d2 * RatFun(Rational(-1, 2));
      s.g = DPoly::linear_root(-rn - RatFun(2) * lam);
      s.normalization = pow2(n) * pochhammer(lam, n) / RatFun(factorial(n));
      s.equation = from_roots({rn, -rn - RatFun(2) * lam}) - d2;
      break;
    }
    case Family::Chebyshev1:
      s.a_op = d2 * RatFun(Rational(-1, 2));
      s.g = DPoly::linear_root(-rn);
      s.normalization = n == 0 ? RatFun(1) : pow2(n - 1);
      s.equation = from_roots({rn, -rn}) - d2;
      break;
    case Family::Chebyshev2:
      s.a_op = d2 * RatFun(Rational(-1, 2));
      s.g = DPoly::linear_root(RatFun(-n - 2));
      s.normalization = pow2(n);
      s.equation = from_roots({rn, RatFun(-n - 2)}) - d2;
      break;
    case Family::Bessel: {
      long nu = nonnegative_integer(param(b, "nu"), "nu");
      s.a_op = DiffOp::x(2) * RatFun(Rational(-1, 2));
      s.g = DPoly::linear_root(RatFun(-nu));
      s.carrier = nu;
      s.cutoff = static_cast<int>(n);
      s.normalization = RatFun(Rational(1) / factorial(nu)) / pow2(nu);
      s.equation = from_roots({RatFun(nu), RatFun(-nu)}) + DiffOp::x(2);
      break;
    }
    case Family::ConfluentHG: {
      // Kummer M(-n, gamma, x)
      RatFun gam = param(b, "gamma");
      DiffOp bop = laguerre_b(gam);
      s.a_op = -bop;
      s.normalization = RatFun(n % 2 == 0 ? 1 : -1) / pochhammer(gam, n);
      s.equation = DiffOp::euler() - DiffOp(rn) - bop;
      break;
    }
    case Family::Hypergeometric: {
      // 2F1(a, -n; c; x); the polynomial parameter is beta (or alpha when swapped)
      RatFun a = param(b, opt.swap_hypergeometric ? "beta" : "alpha");
      RatFun c = param(b, "gamma");
      DiffOp bop = laguerre_b(c);
      s.a_op = -bop;
      s.g = DPoly::linear_root(-a);
      s.normalization = RatFun(n % 2 == 0 ? 1 : -1) * pochhammer(a, n) / pochhammer(c, n);
      s.equation = from_roots({-a, rn}) - bop;
      break;
    }
  }
  return s;
}

LaurentPoly generate(const FamilySpec& spec) {
  auto r = solve::graded_exp_apply(spec.a_op, spec.g, LaurentPoly::monomial(spec.carrier),
                                   spec.cutoff);
  return r.value * spec.normalization;
}

LaurentPoly generate(Family f, long n, const Bindings& b, const Options& opt) {
  return generate(make_spec(f, n, b, opt));
}

DEReport verify_de(const FamilySpec& spec) {
  DEReport rep;
  rep.member = generate(spec);
  rep.residual = apply(spec.equation, rep.member);
  if (spec.family == Family::Bessel) {
    rep.allowed_above = spec.carrier + 2L * *spec.cutoff;
    rep.ok = rep.residual.is_zero() || rep.residual.valuation() > *rep.allowed_above;
  } else {
    rep.ok = rep.residual.is_zero();
  }
  return rep;
}

DEReport verify_de(Family f, long n, const Bindings& b, const Options& opt) {
  return verify_de(make_spec(f, n, b, opt));
}

// ---------------------------------------------------------------------------
// Ladders

const std::vector<LadderKind>& all_ladders() {
  static const std::vector<LadderKind> v = [] {
    std::vector<LadderKind> out;
    for (const auto& [k, n] : kLadderNames) out.push_back(k);
    return out;
  }();
  return v;
}

std::string_view name(LadderKind k) {
  for (const auto& [l, n] : kLadderNames) {
    if (l == k) return n;
  }
  return "?";
}

LadderKind ladder_from_name(std::string_view nm) {
  for (const auto& [l, n] : kLadderNames) {
    if (n == nm) return l;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown ladder '" + std::string(nm) + "'");
}

Symbol level_symbol() { return Symbol::intern("n"); }

namespace {

RatFun alpha_sym() { return RatFun::parameter("alpha"); }
RatFun l_sym() { return RatFun::parameter("l"); }
RatFun coulomb_alpha() { return RatFun(2) * l_sym() + RatFun(1); }

Gauge oscillator_gauge() { return Gauge::exponential(RatFun(Rational(-1, 2)), 2); }
Gauge coulomb_gauge() {
  return Gauge::power(l_sym()) * Gauge::exponential(RatFun(Rational(-1, 2)), 1);
}

// C_n / C_{n+s} as a function of symbolic n
RatFun hermite_ratio(long s) { return s > 0 ? RatFun(Rational(1, 2)) : RatFun(2); }
RatFun laguerre_ratio(long s) {
  RatFun n = RatFun::parameter(level_symbol());
  return s > 0 ? -(n + RatFun(1)) : RatFun(-1) / n;
}

struct LaguerrePair {
  DiffOp raise, lower;
  RatFun raise_factor, lower_factor;
};

LaguerrePair laguerre_pair(const RatFun& alpha, int max_depth) {
  RatFun n = RatFun::parameter(level_symbol());
  DiffOp bop = laguerre_b(alpha + RatFun(1));
  LaguerrePair p;
  // x x^n = x^{n+1}; B x^n = n(n + alpha) x^{n-1}
  p.raise = conjugate(bop, DiffOp::x(), max_depth);
  p.lower = conjugate(bop, bop, max_depth);
  p.raise_factor = laguerre_ratio(1);
  p.lower_factor = n * (n + alpha) * laguerre_ratio(-1);
  return p;
}

DiffOp coulomb_printed(bool raise) {
  RatFun l = l_sym();
  DiffOp op = DiffOp::x() * RatFun(Rational(1, 2)) + DiffOp::term(1, 2) + DiffOp::d() * RatFun(2) -
              DiffOp::x(-1) * (l * (l + RatFun(1)));
  if (raise) return op - DiffOp::euler() - DiffOp(RatFun(1));
  return op + DiffOp::euler() + DiffOp(RatFun(1));
}

}  // namespace

LadderIdentity build_ladder(LadderKind kind, int max_depth) {
  RatFun n = RatFun::parameter(level_symbol());
  const DiffOp hermite_a = DiffOp::d(2) * RatFun(Rational(1, 4));
  LadderIdentity id{kind, {}, {}, 0, 0, RatFun(1), false, std::nullopt};
  switch (kind) {
    case LadderKind::HermiteRaise:
    case LadderKind::OscillatorRaise: {
      // 2x x^n = 2 x^{n+1}
      id.op = conjugate(hermite_a, DiffOp::x() * RatFun(2), max_depth);
      id.printed = DiffOp::x() * RatFun(2) - DiffOp::d();
      id.shift_n = 1;
      id.factor = RatFun(2) * hermite_ratio(1);
      break;
    }
    case LadderKind::HermiteLower:
    case LadderKind::OscillatorLower:
      id.op = conjugate(hermite_a, DiffOp::d(), max_depth);
      id.printed = DiffOp::d();
      id.shift_n = -1;
      id.factor = n * hermite_ratio(-1);
      break;
    case LadderKind::LaguerreRaise:
    case LadderKind::CoulombRaise:
    case LadderKind::LaguerreLower:
    case LadderKind::CoulombLower: {
      const bool coulomb = kind == LadderKind::CoulombRaise || kind == LadderKind::CoulombLower;
      const bool raise = kind == LadderKind::LaguerreRaise || kind == LadderKind::CoulombRaise;
      RatFun alpha = coulomb ? coulomb_alpha() : alpha_sym();
      auto pair = laguerre_pair(alpha, max_depth);
      id.op = raise ? pair.raise : pair.lower;
      id.factor = raise ? pair.raise_factor : pair.lower_factor;
      id.shift_n = raise ? 1 : -1;
      DiffOp bop = laguerre_b(alpha_sym() + RatFun(1));
      id.printed = raise ? DiffOp::x() - DiffOp::euler() * RatFun(2) - DiffOp(alpha_sym() + RatFun(1)) + bop
                         : bop;
      if (coulomb) {
        id.printed = coulomb_printed(raise);
        id.gauge = coulomb_gauge();
        id.op = gauge_transform(id.op, id.gauge->inverse());
      }
      break;
    }
    case LadderKind::LaguerreAlphaShift: {
      // d B_alpha = B_{alpha+1} d, so d commutes past the exponential form
      DiffOp b0 = laguerre_b(alpha_sym() + RatFun(1));
      DiffOp b1 = laguerre_b(alpha_sym() + RatFun(2));
      if (!(DiffOp::d() * b0 == b1 * DiffOp::d())) {
        throw Error(ErrorKind::InvalidArgument, "intertwining relation failed");
      }
      id.op = DiffOp::d();
      id.printed = DiffOp::d();
      id.shift_n = -1;
      id.shift_alpha = 1;
      id.factor = n * laguerre_ratio(-1);
      break;
    }
  }
  if (kind == LadderKind::OscillatorRaise || kind == LadderKind::OscillatorLower) {
    const bool raise = kind == LadderKind::OscillatorRaise;
    id.gauge = oscillator_gauge();
    id.op = gauge_transform(id.op, id.gauge->inverse());
    id.printed = raise ? DiffOp::x() - DiffOp::d() : DiffOp::d() + DiffOp::x();
    id.factor_squared = true;
    id.factor = raise ? RatFun(2) * (n + RatFun(1)) : RatFun(2) * n;
  }
  return id;
}

LaurentPoly ladder_member(LadderKind kind, long n, long alpha_shift) {
  switch (kind) {
    case LadderKind::HermiteRaise:
    case LadderKind::HermiteLower:
    case LadderKind::OscillatorRaise:
    case LadderKind::OscillatorLower:
      return generate(Family::Hermite, n);
    case LadderKind::CoulombRaise:
    case LadderKind::CoulombLower:
      return generate(Family::Laguerre, n,
                      {{Symbol::intern("alpha"), coulomb_alpha() + RatFun(alpha_shift)}});
    default:
      return generate(Family::Laguerre, n,
                      {{Symbol::intern("alpha"), alpha_sym() + RatFun(alpha_shift)}});
  }
}

LadderReport verify_ladder(const LadderIdentity& id, long n_max) {
  LadderReport rep;
  rep.printed_matches = id.op == id.printed;
  const DiffOp poly_op = id.gauge ? gauge_transform(id.op, *id.gauge) : id.op;

  std::vector<LaurentPoly> base, shifted;
  for (long k = 0; k <= n_max + 1; ++k) {
    base.push_back(ladder_member(id.kind, k));
    shifted.push_back(id.shift_alpha == 0 ? base.back() : ladder_member(id.kind, k, id.shift_alpha));
  }
  // squared norm weight of the oscillator states, 1/(2^n n!)
  auto weight = [](long k) { return RatFun(Rational(1) / factorial(k)) / pow2(k); };

  for (long k = 0; k <= n_max; ++k) {
    ++rep.checked;
    LaurentPoly lhs = apply(poly_op, base[static_cast<std::size_t>(k)]);
    long target = k + id.shift_n;
    LaurentPoly rhs = target < 0 ? LaurentPoly{} : shifted[static_cast<std::size_t>(target)];
    RatFun f = substitute(id.factor, {{level_symbol(), RatFun(k)}});
    bool ok;
    if (!id.factor_squared) {
      ok = lhs == rhs * f;
    } else if (rhs.is_zero()) {
      ok = lhs.is_zero();
    } else {
      RatFun q = lhs.is_zero() ? RatFun() : lhs.coeff(rhs.degree()) / rhs.coeff(rhs.degree());
      ok = lhs == rhs * q && q * q == f * weight(target) / weight(k);
    }
    if (!ok && rep.ok) {
      rep.ok = false;
      rep.first_failure = k;
      rep.detail = "n=" + std::to_string(k) + ": lhs " + to_string(lhs) + " vs rhs " +
                   to_string(rhs * f);
    }
  }
  return rep;
}

}  // namespace eulerop::families
