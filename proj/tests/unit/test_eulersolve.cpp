#include <doctest.h>

#include "eulerop/error.hpp"
#include "eulerop/eulersolve.hpp"
#include "oracles.hpp"

using namespace eulerop;
using namespace eulerop::solve;

namespace {

RatFun E() { return RatFun::parameter("E"); }
LaurentPoly mono(long k, const RatFun& c = RatFun(1)) { return LaurentPoly::monomial(k, c); }

// D (D - 1)
DPoly dd1() { return DPoly({RatFun(0), RatFun(-1), RatFun(1)}); }

// x^2 (2E - x^2)
DiffOp harmonic_p() {
  return DiffOp::multiplication(mono(2, RatFun(2) * E()) - mono(4));
}

template <class Fn>
ErrorKind error_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no throw");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("indicial roots") {
  CHECK(indicial_roots(dd1()).integer == std::vector<long>{0, 1});

  RatFun n = RatFun::parameter("n");
  IndicialRoots sym = indicial_roots(DPoly::linear_root(n));
  CHECK(sym.integer.empty());
  REQUIRE(sym.symbolic.size() == 1);
  CHECK(sym.symbolic[0] == n);

  DPoly tn = DPoly::linear_root(-n) * DPoly::linear_root(n);
  DPoly bound = tn.evaluated({{Symbol::intern("n"), Rational(3)}});
  CHECK(indicial_roots(bound).integer == std::vector<long>{-3, 3});
  CHECK(indicial_roots(tn).symbolic.size() == 2);

  CHECK(indicial_roots(DPoly({RatFun(1), RatFun(0), RatFun(1)})).integer.empty());
}

TEST_CASE("inverting F on monomials") {
  CHECK(invert_f_on(dd1(), mono(2)) == mono(2, RatFun(Rational(1, 2))));
  RatFun n = RatFun::parameter("n");
  // x^{n-2} is not a fixed power; check the shift rule at several n instead
  for (long k = 2; k <= 8; ++k) {
    DPoly f = DPoly::linear_root(RatFun(k));
    CHECK(invert_f_on(f, mono(k - 2)) == mono(k - 2, RatFun(Rational(-1, 2))));
  }
  CHECK(DPoly::linear_root(n)(n - RatFun(2)) == RatFun(-2));
  try {
    invert_f_on(dd1(), mono(1));
    FAIL("no throw");
  } catch (const ResonanceError& e) {
    CHECK(e.degree() == 1);
  }
}

TEST_CASE("inversion undoes F away from its roots") {
  DPoly f = dd1() * DPoly::linear_root(RatFun(-3));
  for (long k = -6; k <= 6; ++k) {
    if (k == 0 || k == 1 || k == -3) continue;
    LaurentPoly p = mono(k, RatFun(k * k + 1));
    CHECK(apply(f.to_diffop(), invert_f_on(f, p)) == p);
    CHECK(invert_f_on(f, apply(f.to_diffop(), p)) == p);
  }
}

TEST_CASE("harmonic oscillator series against the recurrence") {
  EulerEquation eq(dd1(), harmonic_p());
  SeriesSolution s = series_solve(eq, 0, 6);
  CHECK_FALSE(s.terminated);
  CHECK(s.body.coeff(2) == -E());
  CHECK(s.body.coeff(4) == (RatFun(2) + RatFun(4) * E() * E()) / RatFun(24));
  auto ref = oracle::harmonic_series(E(), 6);
  for (const auto& [k, c] : ref) CHECK(s.body.coeff(k) == c);
  CHECK(s.body.coeff(6) == -(RatFun(2) * E().pow(3) + RatFun(7) * E()) / RatFun(180));

  // residual vanishes up to cutoff minus the largest raising degree
  LaurentPoly r = residual(eq, s.body);
  for (const auto& [k, c] : r.terms()) CHECK(k > 6 - 2);
}

TEST_CASE("harmonic series at E = 1/2 is the Gaussian") {
  EulerEquation eq(dd1(), harmonic_p());
  SeriesSolution s = series_solve(eq, 0, 20);
  LaurentPoly at = s.body.evaluated({{Symbol::intern("E"), Rational(1, 2)}});
  for (const auto& [k, c] : oracle::gaussian(Rational(1, 2), 20)) CHECK(at.coeff(k) == RatFun(c));
  CHECK(at.coeff(6) == RatFun(Rational(-1, 48)));
}

TEST_CASE("Hermite through a lowering perturbation") {
  EulerEquation eq(DPoly::linear_root(RatFun(2)), DiffOp::d(2) * RatFun(Rational(-1, 2)));
  SeriesSolution s = series_solve(eq, 2, 2);
  CHECK(s.terminated);
  CHECK(s.body == mono(2) - mono(0, RatFun(Rational(1, 2))));
  CHECK(s.body * RatFun(4) == oracle::hermite(2));
  CHECK(residual(eq, s.body).is_zero());
}

TEST_CASE("series route equals the exponential route for Hermite") {
  for (long n = 0; n <= 12; ++n) {
    EulerEquation eq(DPoly::linear_root(RatFun(n)), DiffOp::d(2) * RatFun(Rational(-1, 2)));
    SeriesSolution s = series_solve(eq, n, n);
    auto e = exp_apply(DiffOp::d(2) * RatFun(Rational(-1, 4)), mono(n));
    CHECK(s.body == e.value);
    CHECK(s.terminated);
  }
}

TEST_CASE("confluent hypergeometric series") {
  RatFun a = RatFun::parameter("alpha"), g = RatFun::parameter("gamma");
  DPoly f({RatFun(0), g - RatFun(1), RatFun(1)});  // D(D-1) + gamma D
  DiffOp p = -DiffOp::term(2, 1) - DiffOp::x() * a;
  SeriesSolution s = series_solve(EulerEquation(f, p), 0, 2);
  CHECK(s.body.coeff(0) == RatFun(1));
  CHECK(s.body.coeff(1) == a / g);
  CHECK(s.body.coeff(2) == a * (a + RatFun(1)) / (g * (g + RatFun(1)) * RatFun(2)));
}

TEST_CASE("errors") {
  EulerEquation eq(dd1(), harmonic_p());
  CHECK(error_of([&] { series_solve(eq, 2, 6); }) == ErrorKind::NotAnIndicialRoot);
  // degree-zero part in P
  CHECK(error_of([&] { EulerEquation(dd1(), DiffOp(RatFun(1))); }) == ErrorKind::InvalidEquation);
  // x^2 d^2 + 2 x d - 2 = (D - 1)(D + 2); P = x hits the root at 1 from lambda = -2
  DPoly f = DPoly::linear_root(RatFun(1)) * DPoly::linear_root(RatFun(-2));
  EulerEquation res(f, DiffOp::x());
  CHECK(error_of([&] { series_solve(res, -2, 4); }) == ErrorKind::ResonanceError);
}

TEST_CASE("splitting a raw operator") {
  DiffOp raw = DiffOp::term(2, 2) + DiffOp::x(2) * (RatFun(2) * E()) - DiffOp::x(4);
  Split sp = split_equation(raw);
  CHECK(sp.f == dd1());
  CHECK(sp.p == harmonic_p());
  CHECK(EulerEquation::from_operator(raw).full_operator() == raw);
  CHECK(to_dpoly(DiffOp::term(2, 2)) == dd1());
  CHECK(error_of([&] { to_dpoly(DiffOp::x()); }) == ErrorKind::InvalidEquation);
}
