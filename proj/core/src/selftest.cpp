#include "eulerop/selftest.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "eulerop/error.hpp"
#include "eulerop/expr.hpp"
#include "eulerop/families.hpp"
#include "eulerop/manybody.hpp"
#include "eulerop/spectra.hpp"

namespace eulerop::selftest {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

RatFun random_coeff(Rng& rng, bool symbolic) {
  long num = uniform(rng, -5, 5);
  if (num == 0) num = 1;
  RatFun c(Rational(num, uniform(rng, 1, 4)));
  if (symbolic && uniform(rng, 0, 3) == 0) {
    c = c * (RatFun::parameter("alpha") + RatFun(uniform(rng, -2, 2)));
  }
  return c;
}

DiffOp random_op(Rng& rng, long xlo, long xhi, long dmax, bool symbolic) {
  DiffOp op;
  const long n = uniform(rng, 1, 3);
  for (long i = 0; i < n; ++i) {
    op.add_term(uniform(rng, xlo, xhi), uniform(rng, 0, dmax), random_coeff(rng, symbolic));
  }
  return op;
}

LaurentPoly random_laurent(Rng& rng, long lo, long hi, bool symbolic) {
  LaurentPoly p;
  const long n = uniform(rng, 1, 4);
  for (long i = 0; i < n; ++i) p.add_term(uniform(rng, lo, hi), random_coeff(rng, symbolic));
  return p;
}

template <class Body>
Check timed(std::string name, Body body) {
  Check c;
  c.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("unexpected exception: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

void fail(Check& c, const std::string& what) {
  if (c.ok) c.detail = what;
  c.ok = false;
}

families::Bindings numeric_bindings(families::Family f, long nu) {
  families::Bindings b;
  for (const auto& p : families::parameters(f)) {
    const Symbol s = Symbol::intern(p);
    if (p == "nu") {
      b[s] = RatFun(nu);
    } else if (p == "gamma") {
      b[s] = RatFun(2);
    } else {
      b[s] = RatFun(1);
    }
  }
  return b;
}

}  // namespace

Check grading_law(const Options& opt) {
  return timed("opalg.grading", [&](Check& c) {
    Rng rng(opt.seed);
    const DiffOp d = DiffOp::euler();
    for (long i = 0; i < opt.random_cases; ++i, ++c.cases) {
      const long a = uniform(rng, -6, 6), b = uniform(rng, 0, 6);
      const DiffOp t = DiffOp::term(a, b, random_coeff(rng, true));
      if (!(commutator(d, t) == t * RatFun(a - b))) {
        fail(c, "[D, " + to_string(t) + "] is not " + std::to_string(a - b) + " times the term");
      }
    }
  });
}

Check normal_ordering(const Options& opt) {
  return timed("opalg.normal_ordering", [&](Check& c) {
    Rng rng(opt.seed + 1);
    for (long i = 0; i < opt.random_cases; ++i, ++c.cases) {
      const DiffOp a = random_op(rng, -3, 3, 3, true);
      const DiffOp b = random_op(rng, -3, 3, 3, true);
      const LaurentPoly p = random_laurent(rng, -3, 6, false);
      if (!(apply(a * b, p) == apply(a, apply(b, p)))) {
        fail(c, "(" + to_string(a) + ")*(" + to_string(b) + ") on " + to_string(p));
      }
    }
  });
}

Check jacobi(const Options& opt) {
  return timed("opalg.jacobi", [&](Check& c) {
    Rng rng(opt.seed + 2);
    for (long i = 0; i < opt.random_cases; ++i, ++c.cases) {
      const DiffOp a = random_op(rng, -2, 3, 3, true);
      const DiffOp b = random_op(rng, -2, 3, 3, true);
      const DiffOp e = random_op(rng, -2, 3, 3, false);
      const DiffOp sum = commutator(commutator(a, b), e) + commutator(commutator(b, e), a) +
                         commutator(commutator(e, a), b);
      if (!sum.is_zero()) {
        fail(c, to_string(a) + " | " + to_string(b) + " | " + to_string(e));
      }
    }
  });
}

Check homomorphism(const Options& opt) {
  return timed("opalg.homomorphism", [&](Check& c) {
    Rng rng(opt.seed + 3);
    for (long i = 0; i < opt.random_cases; ++i, ++c.cases) {
      DiffOp a;
      for (long b = 1; b <= 3; ++b) {
        if (uniform(rng, 0, 1) || (b == 3 && a.is_zero())) {
          a.add_term(0, b, random_coeff(rng, true));
        }
      }
      const DiffOp b = random_op(rng, 0, 3, 2, false);
      const LaurentPoly p = random_laurent(rng, 0, 10, false);
      const LaurentPoly lhs = apply(conjugate(a, b, opt.max_depth), exp_apply(-a, p).value);
      const LaurentPoly rhs = exp_apply(-a, apply(b, p)).value;
      if (!(lhs == rhs)) fail(c, "A = " + to_string(a) + ", B = " + to_string(b));
    }
  });
}

Check parser_fuzz(const Options& opt) {
  return timed("cli.parser_fuzz", [&](Check& c) {
    static const std::vector<std::string> alphabet = {
        "x", "d", "D", "0", "1", "2", "12", "alpha", "beta", "gamma", "+", "-", "*", "/",
        "^", "(", ")", " ", "\n", "$", "^-", "3/4", "x^2", "(x+d)"};
    Rng rng(opt.seed + 4);
    const ParamSet params{"alpha", "beta"};
    long parsed = 0;
    for (long i = 0; i < opt.fuzz_inputs; ++i, ++c.cases) {
      std::string src;
      const long len = uniform(rng, 0, 12);
      long carets = 0;
      for (long k = 0; k < len; ++k) {
        const auto& tok = alphabet[static_cast<std::size_t>(
            uniform(rng, 0, static_cast<long>(alphabet.size()) - 1))];
        if (tok.find('^') != std::string::npos) ++carets;
        src += tok;
      }
      OpExpr e;
      try {
        e = parse_expr(src);
      } catch (const SyntaxError& err) {
        if (err.line() < 1 || err.column() < 1) fail(c, "bad position for '" + src + "'");
        continue;
      } catch (const std::exception& err) {
        fail(c, "'" + src + "' threw " + err.what());
        continue;
      }
      ++parsed;
      try {
        if (!(parse_expr(print(e)) == e)) fail(c, "print round trip of '" + src + "'");
      } catch (const std::exception& err) {
        fail(c, "reparse of '" + print(e) + "' threw " + err.what());
      }
      if (carets > 1) continue;
      try {
        lower(e, params);
      } catch (const Error& err) {
        const auto k = err.kind();
        if (k != ErrorKind::SyntaxError && k != ErrorKind::UnknownParameter &&
            k != ErrorKind::ZeroDenominator) {
          fail(c, "'" + src + "' lowered with " + err.what());
        }
      } catch (const std::exception& err) {
        fail(c, "'" + src + "' lowered with " + err.what());
      }
    }
    c.detail = c.ok ? std::to_string(parsed) + " inputs parsed" : c.detail;
  });
}

Check operator_round_trip(const Options& opt) {
  return timed("cli.operator_round_trip", [&](Check& c) {
    Rng rng(opt.seed + 5);
    const ParamSet params{"alpha"};
    for (long i = 0; i < opt.random_cases; ++i, ++c.cases) {
      const DiffOp op = random_op(rng, -3, 4, 3, true);
      const std::string s = to_string(op);
      if (!(parse_operator(s, params) == op)) fail(c, "'" + s + "' does not parse back");
    }
  });
}

Check family_equations(const Options&) {
  return timed("families.equations", [](Check& c) {
    using families::Family;
    for (Family f : families::all_families()) {
      const std::vector<long> nus =
          f == Family::Bessel ? std::vector<long>{0, 1, 2} : std::vector<long>{0};
      for (long nu : nus) {
        for (long n = 0; n <= 30; ++n, ++c.cases) {
          const auto r = families::verify_de(f, n, numeric_bindings(f, nu));
          if (!r.ok) {
            fail(c, std::string(families::name(f)) + " n=" + std::to_string(n) + " residual " +
                        to_string(r.residual));
          }
        }
      }
    }
    for (long n = 0; n <= 30; ++n, ++c.cases) {
      const auto r = families::verify_de(Family::Hypergeometric, n,
                                         numeric_bindings(Family::Hypergeometric, 0),
                                         families::Options{true});
      if (!r.ok) fail(c, "hypergeometric (swapped) n=" + std::to_string(n));
    }
    for (long n = 0; n <= 15; ++n, ++c.cases) {
      if (!families::verify_de(Family::Laguerre, n).ok) {
        fail(c, "laguerre symbolic alpha n=" + std::to_string(n));
      }
    }
  });
}

Check family_parity(const Options&) {
  return timed("families.parity", [](Check& c) {
    using families::Family;
    for (Family f : {Family::Hermite, Family::Legendre, Family::Gegenbauer, Family::Chebyshev1,
                     Family::Chebyshev2}) {
      for (long n = 0; n <= 20; ++n, ++c.cases) {
        const LaurentPoly p = families::generate(f, n, numeric_bindings(f, 0));
        const LaurentPoly q = n % 2 ? -p : p;
        if (!(p.reflected() == q)) {
          fail(c, std::string(families::name(f)) + " n=" + std::to_string(n));
        }
      }
    }
  });
}

Check ladders(const Options& opt) {
  return timed("families.ladders", [&](Check& c) {
    std::string notes;
    for (auto k : families::all_ladders()) {
      const bool coulomb = k == families::LadderKind::CoulombRaise ||
                           k == families::LadderKind::CoulombLower;
      const auto id = families::build_ladder(k, opt.max_depth);
      const auto r = families::verify_ladder(id, coulomb ? 8 : 20);
      c.cases += r.checked;
      if (!r.ok) fail(c, std::string(families::name(k)) + ": " + r.detail);
      if (!r.printed_matches) {
        notes += (notes.empty() ? "" : ", ") + std::string(families::name(k));
      }
    }
    if (c.ok && !notes.empty()) c.detail = "derived operator differs from the printed one: " + notes;
  });
}

Check harmonic(const Options&) {
  return timed("spectra.harmonic", [](Check& c) {
    const auto r = spectra::harmonic_quantization_check(40);
    c.cases = 1;
    if (!r.matches_at_half) fail(c, "E = 1/2 does not reproduce exp(-x^2/2)");
    if (!r.deviates_at_wrong) fail(c, "wrong energy is not detected");
  });
}

Check qes(const Options&) {
  return timed("spectra.qes", [](Check& c) {
    const Symbol e = spectra::energy_symbol();
    for (long n : {0L, 2L, 4L, 6L}) {
      ++c.cases;
      const auto r = spectra::qes_sextic(n, Rational(1), n + 12);
      const std::string at = "n=" + std::to_string(n) + ": ";
      if (r.energy_polynomial.degree_in(e.id()) != n / 2 + 1) fail(c, at + "energy degree");
      if (!r.higher_vanish) fail(c, at + "higher coefficients do not vanish");
      for (const auto& ev : r.eigen) {
        if (!ev.residual.is_zero()) fail(c, at + "nonzero residual");
        for (const auto& [k, _] : ev.psi.terms()) {
          if (k % 2) fail(c, at + "odd power in eigenfunction");
        }
      }
      if (n == 2 || n == 4) {
        const auto p = spectra::to_upoly(r.energy_polynomial, e);
        spectra::UPoly q = p, neg = p;
        for (std::size_t k = 0; k < p.size(); ++k) {
          if (k % 2) q[k] = -q[k];
          neg[k] = -neg[k];
        }
        if (q != p && q != neg) fail(c, at + "spectrum not symmetric under E -> -E");
      }
    }
  });
}

Check anharmonic(const Options&) {
  return timed("spectra.anharmonic", [](Check& c) {
    const RatFun a = RatFun::parameter("alpha"), b = RatFun::parameter("beta");
    const RatFun e = RatFun::parameter(spectra::energy_symbol());
    const auto r = spectra::anharmonic_ground(a, b, 8);
    c.cases = 2;
    if (!r.cubic_matches) fail(c, "symbolic cubic differs");
    if (!(r.mu == e * RatFun(Rational(1, 2)))) fail(c, "mu is not E/2");
    if (!(r.mu * r.mu * RatFun(Rational(1, 2)) - r.nu ==
          (RatFun(2) * a + e * e) * RatFun(Rational(1, 24)))) {
      fail(c, "second matching relation");
    }
    const auto h = spectra::anharmonic_ground(RatFun(1), RatFun(0), 8);
    if (!h.exact_e0 || *h.exact_e0 != 1) fail(c, "harmonic limit is not 1");
  });
}

Check jack(const Options&) {
  return timed("manybody.jack", [](Check& c) {
    using namespace manybody;
    const RatFun beta = RatFun::parameter("beta");
    for (auto [n, wmax] : {std::pair<std::size_t, long>{2, 6}, {3, 4}}) {
      for (long w = 0; w <= wmax; ++w) {
        for (const auto& lam : partitions(w, n)) {
          ++c.cases;
          const std::string at = lam.str() + " N=" + std::to_string(n);
          const SymPoly j = manybody::jack(lam, beta, n);
          if (!sutherland_residual(j, lam, beta, n).is_zero()) fail(c, at + ": residual");
          if (!dominance_triangular(j, lam)) fail(c, at + ": not triangular");
          if (!(j.evaluated({{Symbol::intern("beta"), Rational(0)}}) == msf(lam, n))) {
            fail(c, at + ": beta = 0 limit");
          }
        }
      }
    }
  });
}

Check calogero(const Options&) {
  return timed("manybody.calogero", [](Check& c) {
    using namespace manybody;
    const RatFun beta = RatFun::parameter("beta");
    for (auto [n, wmax] : {std::pair<std::size_t, long>{2, 6}, {3, 4}}) {
      for (long w = 0; w <= wmax; ++w) {
        for (const auto& lam : partitions(w, n)) {
          ++c.cases;
          if (!calogero_verify(lam, beta, n).ok) fail(c, lam.str() + " N=" + std::to_string(n));
        }
      }
    }
  });
}

Check symmetry_closure(const Options&) {
  return timed("manybody.symmetry", [](Check& c) {
    using namespace manybody;
    const RatFun beta = RatFun::parameter("beta");
    for (std::size_t n = 2; n <= 4; ++n) {
      for (long w = 0; w <= 6; ++w) {
        for (const auto& lam : partitions(w, n)) {
          ++c.cases;
          const ZPoly m = msf_expand(lam, n);
          const std::string at = lam.str() + " N=" + std::to_string(n);
          if (!sutherland_offdiag(m).is_symmetric()) fail(c, at + ": Sutherland part");
          if (!calogero_a(m, beta).is_symmetric()) fail(c, at + ": Calogero A");
          if (!euler_square_sum(m).is_symmetric()) fail(c, at + ": Euler part");
        }
      }
    }
  });
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"opalg.grading", grading_law},
      {"opalg.normal_ordering", normal_ordering},
      {"opalg.jacobi", jacobi},
      {"opalg.homomorphism", homomorphism},
      {"cli.parser_fuzz", parser_fuzz},
      {"cli.operator_round_trip", operator_round_trip},
      {"families.equations", family_equations},
      {"families.parity", family_parity},
      {"families.ladders", ladders},
      {"spectra.harmonic", harmonic},
      {"spectra.qes", qes},
      {"spectra.anharmonic", anharmonic},
      {"manybody.jack", jack},
      {"manybody.calogero", calogero},
      {"manybody.symmetry", symmetry_closure},
  };
  return entries;
}

std::vector<Check> run_all(const Options& opt, const std::function<void(const Check&)>& progress) {
  std::vector<Check> out;
  for (const auto& e : registry()) {
    out.push_back(e.run(opt));
    if (progress) progress(out.back());
  }
  return out;
}

}  // namespace eulerop::selftest
