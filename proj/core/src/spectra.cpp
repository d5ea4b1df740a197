#include "eulerop/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

#include "eulerop/error.hpp"

namespace eulerop::spectra {

Symbol energy_symbol() { return Symbol::intern("E"); }

// ---------------------------------------------------------------------------
// Univariate helpers

namespace {

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly derivative(const UPoly& p) {
  UPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
  trim(out);
  return out;
}

// p = q*d + r
std::pair<UPoly, UPoly> divmod(UPoly p, const UPoly& d) {
  trim(p);
  if (p.size() < d.size()) return {{}, p};
  UPoly q(p.size() - d.size() + 1);
  const auto dl = static_cast<long>(d.size()) - 1;
  for (long i = static_cast<long>(p.size()) - 1; i >= dl; --i) {
    const auto shift = static_cast<std::size_t>(i - dl);
    Rational c = p[static_cast<std::size_t>(i)] / d.back();
    q[shift] = c;
    for (std::size_t j = 0; j < d.size(); ++j) p[shift + j] -= c * d[j];
  }
  trim(p);
  trim(q);
  return {q, p};
}

UPoly monic(UPoly p) {
  trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

int sign(const Rational& r) { return sgn(r); }

class Sturm {
 public:
  explicit Sturm(const UPoly& p) {
    seq_.push_back(p);
    seq_.push_back(derivative(p));
    while (!seq_.back().empty()) {
      auto r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
      for (auto& c : r) c = -c;
      if (r.empty()) break;
      seq_.push_back(r);
    }
  }
  int variations(const Rational& x) const {
    int v = 0, prev = 0;
    for (const auto& q : seq_) {
      int s = sign(eval(q, x));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }
  // roots in (a, b]
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

 private:
  std::vector<UPoly> seq_;
};

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out;
  Integer a = abs(n);
  if (a == 0 || a > Integer("1000000000000")) return out;
  for (Integer d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  }
  return out;
}

}  // namespace

Rational eval(const UPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly to_upoly(const MPoly& p, Symbol var) {
  auto vars = p.variables();
  for (auto v : vars) {
    if (v != var.id()) {
      throw Error(ErrorKind::InvalidArgument,
                  "polynomial depends on parameter '" + Symbol::from_id(v).name() + "'");
    }
  }
  UPoly out;
  for (const auto& c : p.coefficients_in(var.id())) out.push_back(c.constant_term());
  trim(out);
  return out;
}

std::vector<RealRoot> real_roots(const UPoly& input, const Rational& width) {
  UPoly p = input;
  trim(p);
  std::vector<RealRoot> roots;
  if (p.size() < 2) return roots;
  UPoly q = monic(divmod(p, upoly_gcd(p, derivative(p))).first);
  const Sturm sturm(q);

  Rational bound = 0;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) bound = std::max(bound, Rational(abs(q[i])));
  bound += 1;

  // leading coefficient of the primitive integer form bounds rational denominators
  Integer lcm = 1;
  for (const auto& c : q) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  const auto dens = divisors(Integer(q.back() * lcm));

  auto exact_root = [](const Rational& r) {
    return RealRoot{r, r, r, r.get_d()};
  };

  auto refine = [&](Rational lo, Rational hi) {
    while (hi - lo > width) {
      Rational mid = (lo + hi) / 2;
      if (eval(q, mid) == 0) return exact_root(mid);
      if (sturm.count(lo, mid) == 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    if (eval(q, hi) == 0) return exact_root(hi);
    Rational mid = (lo + hi) / 2;
    for (const auto& d : dens) {
      Rational shifted = mid * d + Rational(1, 2);
      Integer nearest;
      mpz_fdiv_q(nearest.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
      Rational guess(nearest, d);
      guess.canonicalize();
      if (guess > lo && guess <= hi && eval(q, guess) == 0) return exact_root(guess);
    }
    return RealRoot{std::nullopt, lo, hi, mid.get_d()};
  };

  std::function<void(const Rational&, const Rational&)> isolate = [&](const Rational& a,
                                                                       const Rational& b) {
    int c = sturm.count(a, b);
    if (c == 0) return;
    if (c == 1) {
      roots.push_back(refine(a, b));
      return;
    }
    Rational mid = (a + b) / 2;
    if (eval(q, mid) != 0) {
      isolate(a, mid);
      isolate(mid, b);
      return;
    }
    // step off the root so both halves start at non-roots
    Rational delta = (b - a) / 4;
    while (sturm.count(mid - delta, mid + delta) != 1 || eval(q, mid - delta) == 0 ||
           eval(q, mid + delta) == 0) {
      delta /= 2;
    }
    isolate(a, mid - delta);
    roots.push_back(exact_root(mid));
    isolate(mid + delta, b);
  };
  isolate(-bound, bound);
  return roots;
}

// ---------------------------------------------------------------------------
// Harmonic oscillator

HarmonicReport harmonic_quantization_check(long cutoff) {
  if (cutoff < 4 || cutoff % 2 != 0) {
    throw Error(ErrorKind::InvalidArgument, "cutoff must be even and at least 4");
  }
  const RatFun e = RatFun::parameter(energy_symbol());
  solve::EulerEquation eq(solve::DPoly({RatFun(0), RatFun(-1), RatFun(1)}),
                          DiffOp::x(2) * (RatFun(2) * e) - DiffOp::x(4));
  HarmonicReport rep;
  rep.series = solve::series_solve(eq, 0, cutoff);

  LaurentPoly half = rep.series.body.evaluated({{energy_symbol(), Rational(1, 2)}});
  rep.matches_at_half = true;
  Rational taylor = 1;  // (-1/2)^k / k!
  for (long k = 0; 2 * k <= cutoff; ++k) {
    if (k > 0) taylor *= Rational(-1, 2 * k);
    bool ok = half.coeff(2 * k) == RatFun(taylor) && half.coeff(2 * k + 1).is_zero();
    if (!ok && rep.matches_at_half) {
      rep.matches_at_half = false;
      rep.first_mismatch = 2 * k;
    }
  }

  rep.wrong_energy = RatFun(Rational(3, 2));
  LaurentPoly wrong = rep.series.body.evaluated({{energy_symbol(), Rational(3, 2)}});
  rep.x4_at_wrong = wrong.coeff(4);
  rep.x4_gaussian = rep.wrong_energy * rep.wrong_energy / RatFun(2);
  rep.deviates_at_wrong = !(rep.x4_at_wrong == rep.x4_gaussian);
  return rep;
}

// ---------------------------------------------------------------------------
// QES sextic

namespace {

std::optional<Rational> rational_sqrt(const Rational& v) {
  if (v < 0) return std::nullopt;
  if (mpz_perfect_square_p(v.get_num_mpz_t()) == 0 || mpz_perfect_square_p(v.get_den_mpz_t()) == 0) {
    return std::nullopt;
  }
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), v.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v.get_den_mpz_t());
  return Rational(n, d);
}

}  // namespace

DiffOp qes_operator(const Rational& g, const Rational& alpha, const RatFun& energy) {
  return -DiffOp::d(2) + DiffOp::term(3, 1, RatFun(2 * g)) + DiffOp::x(2) * RatFun(alpha + 3 * g) -
         DiffOp(energy);
}

QESResult qes_sextic(long n, const Rational& gamma, long cutoff) {
  if (n < 0 || n % 2 != 0) throw Error(ErrorKind::InvalidArgument, "n must be even and nonnegative");
  auto g = rational_sqrt(gamma);
  if (!g || *g == 0) {
    throw Error(ErrorKind::InvalidArgument, "gamma must be a positive rational square");
  }
  if (cutoff < n + 2) throw Error(ErrorKind::InvalidArgument, "cutoff must be at least n + 2");

  QESResult res;
  res.n = n;
  res.gamma = gamma;
  res.g = *g;
  res.alpha = -(2 * n + 3) * *g;
  res.b = *g / 4;

  const RatFun e = RatFun::parameter(energy_symbol());
  // x^2 [-d^2 + 2g x^3 d + (alpha + 3g) x^2 - E] with the sign flipped
  DiffOp p = DiffOp::x(2) * e + DiffOp::x(4) * RatFun(Rational(2 * n) * *g) -
             DiffOp::term(5, 1, RatFun(2 * *g));
  solve::EulerEquation eq(solve::DPoly({RatFun(0), RatFun(-1), RatFun(1)}), p);
  res.equation = eq.full_operator();
  res.series = solve::series_solve(eq, 0, cutoff);

  const RatFun lead = res.series.body.coeff(n + 2);
  res.energy_polynomial = lead.numerator() * integer_normaliser(lead.numerator());
  MPoly common = lead.numerator();
  for (long k = n + 3; k <= cutoff; ++k) {
    const RatFun c = res.series.body.coeff(k);
    if (!c.is_zero()) common = gcd(common, c.numerator());
  }
  const auto eid = energy_symbol().id();
  if (common.degree_in(eid) == 0) {
    throw Error(ErrorKind::NoPolynomialSolution,
                "no energy terminates the series at degree " + std::to_string(n) +
                    "; coefficient of x^" + std::to_string(n + 2) + " is " + lead.str());
  }
  res.higher_vanish = common.degree_in(eid) == res.energy_polynomial.degree_in(eid);
  res.energies = real_roots(to_upoly(common, energy_symbol()));

  for (const auto& r : res.energies) {
    if (!r.exact) continue;
    QESEigen ev;
    ev.energy = *r.exact;
    ev.psi = res.series.body.evaluated({{energy_symbol(), *r.exact}}).truncated(0, n);
    ev.residual = apply(qes_operator(res.g, res.alpha, RatFun(*r.exact)), ev.psi);
    res.eigen.push_back(std::move(ev));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Anharmonic oscillator

std::optional<double> cubic_closed_form(double alpha, double beta) {
  using C = std::complex<double>;
  const double radicand = 1640.25 * beta * beta - 108.0 * alpha * alpha * alpha;
  // negative radicand: three real roots, the principal branch gives the largest
  const C a = std::pow(C(40.5 * beta) + std::sqrt(C(radicand)), 1.0 / 3.0);
  if (std::abs(a) == 0) return std::nullopt;
  const double c = std::cbrt(2.0);
  const C e = c * alpha / a + a / (3.0 * c);
  if (std::abs(e.imag()) > 1e-9 * std::max(1.0, std::abs(e.real()))) return std::nullopt;
  return e.real();
}

double fd_ground_state(double alpha, double beta, double half_width, int points) {
  const double h = 2.0 * half_width / (points + 1);
  const double off = -1.0 / (h * h);
  std::vector<double> diag(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double x = -half_width + (i + 1) * h;
    diag[static_cast<std::size_t>(i)] = 2.0 / (h * h) + alpha * x * x + beta * x * x * x * x;
  }
  // eigenvalues below lam = negative pivots of H - lam
  auto below = [&](double lam) {
    int count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
      d = diag[i] - lam - (i == 0 ? 0.0 : off * off / d);
      if (d == 0) d = -1e-300;
      if (d < 0) ++count;
    }
    return count;
  };
  double lo = *std::min_element(diag.begin(), diag.end()) - 2.0 * std::abs(off);
  double hi = *std::max_element(diag.begin(), diag.end()) + 2.0 * std::abs(off);
  while (hi - lo > 1e-12 * std::max(1.0, std::abs(hi))) {
    const double mid = 0.5 * (lo + hi);
    if (below(mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

AnharmonicResult anharmonic_ground(const RatFun& alpha, const RatFun& beta, long cutoff,
                                   bool with_oracle) {
  if (cutoff < 6) throw Error(ErrorKind::InvalidArgument, "cutoff must be at least 6");
  AnharmonicResult res;
  res.alpha = alpha;
  res.beta = beta;
  const RatFun e = RatFun::parameter(energy_symbol());
  DiffOp p = DiffOp::x(2) * e - DiffOp::x(4) * alpha - DiffOp::x(6) * beta;
  solve::EulerEquation eq(solve::DPoly({RatFun(0), RatFun(-1), RatFun(1)}), p);
  res.series = solve::series_solve(eq, 0, cutoff);
  res.c2 = res.series.body.coeff(2);
  res.c4 = res.series.body.coeff(4);
  res.c6 = res.series.body.coeff(6);

  // exp(-mu x^2 - nu x^4) = 1 - mu x^2 + (mu^2/2 - nu) x^4 + (mu nu - mu^3/6) x^6 + ...
  res.mu = -res.c2;
  res.nu = res.mu * res.mu / RatFun(2) - res.c4;
  const RatFun condition = res.mu * res.nu - res.mu.pow(3) / RatFun(6) - res.c6;

  const auto eid = energy_symbol().id();
  const auto coeffs = condition.numerator().coefficients_in(eid);
  const RatFun lead = coeffs.empty() ? RatFun() : RatFun(coeffs.back());
  for (const auto& c : coeffs) res.cubic.push_back(lead.is_zero() ? RatFun() : RatFun(c) / lead);
  const std::vector<RatFun> expected{-(RatFun(3) * beta) / RatFun(2), -alpha, RatFun(0), RatFun(1)};
  res.cubic_matches = res.cubic == expected;
  if (!res.cubic_matches) {
    throw Error(ErrorKind::MatchingInconsistent,
                "derived energy condition is not E^3 - alpha*E - 3*beta/2");
  }

  if (alpha.is_constant() && beta.is_constant()) {
    const Rational a = alpha.constant_value();
    const Rational b = beta.constant_value();
    auto roots = real_roots(UPoly{-3 * b / 2, -a, 0, 1}, Rational(1, Integer("100000000000000000000")));
    const double ad = a.get_d();
    const double bd = b.get_d();
    if (auto cf = cubic_closed_form(ad, bd)) {
      res.e0 = *cf;
      res.closed_form_used = true;
    } else if (!roots.empty()) {
      // three real roots: the largest is the ground state continued from beta = 0
      const auto& top = roots.back();
      res.exact_e0 = top.exact;
      res.e0 = top.approx;
    }
    if (!roots.empty() && roots.back().exact && !res.exact_e0) {
      if (std::abs(roots.back().approx - *res.e0) < 1e-9) res.exact_e0 = roots.back().exact;
    }
    if (res.e0) {
      const double x = *res.e0;
      res.cubic_residual = std::abs(x * x * x - ad * x - 1.5 * bd);
    }
    if (with_oracle) res.oracle_e0 = fd_ground_state(ad, bd);
  }
  return res;
}

}  // namespace eulerop::spectra
