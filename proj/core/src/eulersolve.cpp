#include "eulerop/eulersolve.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <set>

#include "eulerop/error.hpp"

namespace eulerop::solve {

// ---------------------------------------------------------------------------
// DPoly

DPoly::DPoly(std::vector<RatFun> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void DPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DPoly DPoly::linear_root(const RatFun& r) { return DPoly({-r, RatFun(1)}); }

RatFun DPoly::operator()(const RatFun& k) const {
  RatFun acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * k + *it;
  return acc;
}

DPoly DPoly::evaluated(const std::map<Symbol, Rational>& bindings) const {
  std::vector<RatFun> c;
  c.reserve(coeffs_.size());
  for (const auto& v : coeffs_) c.push_back(evaluate(v, bindings));
  return DPoly(std::move(c));
}

DPoly operator*(const DPoly& a, const DPoly& b) {
  if (a.is_zero() || b.is_zero()) return DPoly{};
  std::vector<RatFun> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return DPoly(std::move(c));
}

DPoly operator+(const DPoly& a, const DPoly& b) {
  std::vector<RatFun> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return DPoly(std::move(c));
}

DiffOp DPoly::to_diffop() const {
  DiffOp out;
  DiffOp power(RatFun(1));
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    out += power * coeffs_[m];
    power = power * DiffOp::euler();
  }
  return out;
}

DPoly to_dpoly(const DiffOp& op) {
  DPoly out;
  for (const auto& [k, c] : op.terms()) {
    if (k.x_power != k.d_order) {
      throw Error(ErrorKind::InvalidEquation,
                  "term x^" + std::to_string(k.x_power) + "*d^" + std::to_string(k.d_order) +
                      " has nonzero Euler degree");
    }
    // x^k d^k = D(D-1)...(D-k+1)
    DPoly falling = DPoly::constant(c);
    for (long j = 0; j < k.d_order; ++j) falling = falling * DPoly::linear_root(RatFun(j));
    out = out + falling;
  }
  return out;
}

Split split_equation(const DiffOp& equation) {
  Split s;
  s.f = to_dpoly(equation.homogeneous_part(0));
  s.p = equation - equation.homogeneous_part(0);
  return s;
}

// ---------------------------------------------------------------------------
// EulerEquation

EulerEquation::EulerEquation(DPoly f, DiffOp p) : f_(std::move(f)), p_(std::move(p)) {
  if (f_.is_zero()) throw Error(ErrorKind::InvalidEquation, "F(D) is identically zero");
  if (!p_.homogeneous_part(0).is_zero()) {
    throw Error(ErrorKind::InvalidEquation, "P contains a degree-zero part");
  }
}

EulerEquation EulerEquation::from_operator(const DiffOp& equation) {
  auto s = split_equation(equation);
  return EulerEquation(std::move(s.f), std::move(s.p));
}

// ---------------------------------------------------------------------------
// Indicial roots

namespace {

// Integer roots of a polynomial with rational constant coefficients.
std::set<long> integer_roots_const(const std::vector<Rational>& coeffs) {
  std::set<long> roots;
  std::size_t low = 0;
  while (low < coeffs.size() && coeffs[low] == 0) ++low;
  if (low == coeffs.size()) return roots;
  if (low > 0) roots.insert(0);
  if (coeffs.size() - low == 1) return roots;

  Integer lcm = 1;
  for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ic;
  for (std::size_t i = low; i < coeffs.size(); ++i) ic.push_back(Integer(coeffs[i] * lcm));

  auto is_root = [&](long k) {
    Integer acc = 0;
    for (auto it = ic.rbegin(); it != ic.rend(); ++it) acc = acc * k + *it;
    return acc == 0;
  };

  Integer a0 = abs(ic.front());
  if (a0 <= Integer("100000000000000")) {
    Integer limit;
    mpz_sqrt(limit.get_mpz_t(), a0.get_mpz_t());
    for (Integer dv = 1; dv <= limit; ++dv) {
      if (a0 % dv != 0) continue;
      for (Integer cand : {dv, Integer(a0 / dv)}) {
        if (!cand.fits_slong_p()) continue;
        long k = cand.get_si();
        if (is_root(k)) roots.insert(k);
        if (is_root(-k)) roots.insert(-k);
      }
    }
    return roots;
  }
  // Cauchy bound scan for very large constant terms
  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < ic.size(); ++i) {
    Rational r(abs(ic[i]), abs(ic.back()));
    if (r > bound) bound = r;
  }
  bound += 1;
  if (bound > 1000000) return roots;
  long b = static_cast<long>(std::ceil(bound.get_d()));
  for (long k = -b; k <= b; ++k) {
    if (k != 0 && is_root(k)) roots.insert(k);
  }
  return roots;
}

std::vector<Rational> constant_coeffs(const DPoly& f) {
  std::vector<Rational> out;
  for (const auto& c : f.coeffs()) out.push_back(c.constant_value());
  return out;
}

bool all_constant(const DPoly& f) {
  return std::all_of(f.coeffs().begin(), f.coeffs().end(),
                     [](const RatFun& c) { return c.is_constant(); });
}

// f / (D - r), assuming r is a root.
DPoly deflate(const DPoly& f, const RatFun& r) {
  const auto& c = f.coeffs();
  std::vector<RatFun> q(c.size() - 1);
  RatFun carry;
  for (std::size_t i = c.size() - 1; i >= 1; --i) {
    carry = c[i] + carry * r;
    q[i - 1] = carry;
  }
  return DPoly(std::move(q));
}

std::optional<RatFun> sqrt_ratfun(const RatFun& v) {
  // sqrt(n/d) = sqrt(n d)/d
  auto s = sqrt(v.numerator() * v.denominator());
  if (!s) return std::nullopt;
  return normalize(*s, v.denominator());
}

}  // namespace

IndicialRoots indicial_roots(const DPoly& f) {
  IndicialRoots out;
  if (f.is_zero()) return out;

  std::set<long> candidates;
  if (all_constant(f)) {
    candidates = integer_roots_const(constant_coeffs(f));
  } else {
    std::set<std::uint32_t> vars;
    for (const auto& c : f.coeffs()) {
      auto v = c.variables();
      vars.insert(v.begin(), v.end());
    }
    // integer roots of f must survive every specialisation
    const Rational samples[][2] = {{Rational(7, 3), Rational(11, 5)}, {Rational(13, 7), Rational(5, 17)}};
    bool first = true;
    for (const auto& sample : samples) {
      std::map<Symbol, Rational> b;
      std::size_t i = 0;
      for (auto v : vars) {
        b[Symbol::from_id(v)] = sample[i % 2] + Rational(static_cast<long>(i));
        ++i;
      }
      std::set<long> here;
      try {
        here = integer_roots_const(constant_coeffs(f.evaluated(b)));
      } catch (const Error&) {
        continue;
      }
      if (first) {
        candidates = here;
        first = false;
      } else {
        std::set<long> keep;
        std::set_intersection(candidates.begin(), candidates.end(), here.begin(), here.end(),
                              std::inserter(keep, keep.begin()));
        candidates = keep;
      }
    }
  }

  DPoly rest = f;
  for (long k : candidates) {
    if (!rest.is_zero() && rest(k).is_zero()) {
      out.integer.push_back(k);
      while (rest.degree() > 0 && rest(k).is_zero()) rest = deflate(rest, RatFun(k));
    }
  }

  if (rest.degree() == 1) {
    out.symbolic.push_back(-rest.coeffs()[0] / rest.coeffs()[1]);
  } else if (rest.degree() == 2) {
    const auto& c = rest.coeffs();
    RatFun disc = c[1] * c[1] - RatFun(4) * c[2] * c[0];
    if (auto s = sqrt_ratfun(disc)) {
      RatFun two_a = RatFun(2) * c[2];
      RatFun r1 = (-c[1] - *s) / two_a;
      RatFun r2 = (-c[1] + *s) / two_a;
      out.symbolic.push_back(r1);
      if (!(r2 == r1)) out.symbolic.push_back(r2);
    } else {
      out.unresolved = rest;
    }
  } else if (rest.degree() > 2) {
    out.unresolved = rest;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Series construction

LaurentPoly invert_f_on(const DPoly& f, const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [k, c] : p.terms()) {
    RatFun fk = f(k);
    if (fk.is_zero()) throw ResonanceError(k);
    out.add_term(k, c / fk);
  }
  return out;
}

SeriesSolution series_solve(const EulerEquation& eq, long lambda, long cutoff) {
  if (!eq.f()(lambda).is_zero()) {
    throw Error(ErrorKind::NotAnIndicialRoot,
                "F(" + std::to_string(lambda) + ") = " + eq.f()(lambda).str());
  }
  if (cutoff < lambda) {
    throw Error(ErrorKind::InvalidArgument, "cutoff must be at least lambda");
  }
  const auto degs = eq.p().degrees();
  const bool raising = !degs.empty() && degs.front() > 0;
  const bool lowering = !degs.empty() && degs.back() < 0;
  if (!degs.empty() && !raising && !lowering) {
    throw Error(ErrorKind::InvalidEquation, "P mixes raising and lowering parts");
  }
  const long lo = raising ? LONG_MIN : -cutoff;
  const long hi = raising ? cutoff : LONG_MAX;

  SeriesSolution sol;
  sol.lambda = lambda;
  sol.cutoff = cutoff;
  sol.residual_degree = raising ? cutoff + 1 : -cutoff - 1;
  sol.body = LaurentPoly::monomial(lambda);

  LaurentPoly term = sol.body;
  bool dropped = false;
  while (!term.is_zero()) {
    LaurentPoly next = apply(eq.p(), term);
    LaurentPoly kept = next.truncated(lo, hi);
    if (!(kept == next)) dropped = true;
    term = -invert_f_on(eq.f(), kept);
    sol.body += term;
  }
  sol.terminated = !dropped;
  return sol;
}

ExpApplyResult graded_exp_apply(const DiffOp& a, const DPoly& g, const LaurentPoly& p,
                                std::optional<int> cutoff) {
  if (!cutoff) {
    auto degs = a.degrees();
    bool lowering = degs.empty() || degs.back() < 0;
    if (!lowering || !a.preserves_polynomials() || !p.is_polynomial()) {
      throw Error(ErrorKind::TruncationRequired,
                  "exponential series is not guaranteed to terminate; give a cutoff");
    }
  }
  ExpApplyResult out;
  out.value = p;
  LaurentPoly term = p;
  for (int m = 1; !cutoff || m <= *cutoff; ++m) {
    LaurentPoly next = apply(a, term);
    if (next.is_zero()) {
      out.terminated = true;
      out.terms_used = m;
      return out;
    }
    term = invert_f_on(g, next) * RatFun(Rational(1, m));
    out.value += term;
    out.terms_used = m + 1;
  }
  return out;
}

LaurentPoly residual(const EulerEquation& eq, const LaurentPoly& y) {
  return apply(eq.full_operator(), y);
}

}  // namespace eulerop::solve
