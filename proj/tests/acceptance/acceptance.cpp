// Acceptance suite. One line per criterion; exit status is 0 when the set of
// failing criteria equals the known-red list below.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eulerop/error.hpp"
#include "eulerop/expr.hpp"
#include "eulerop/families.hpp"
#include "eulerop/manybody.hpp"
#include "eulerop/selftest.hpp"
#include "eulerop/spectra.hpp"
#include "eulerop_cli/io.hpp"
#include "golden_cases.hpp"
#include "oracles.hpp"

using namespace eulerop;
namespace fs = std::filesystem;

namespace {

// Coulomb ladders: the derived operators carry x/4 where the printed ones
// carry x/2, so "derived equals printed" cannot hold.
const std::set<int> kKnownRed{4};

struct Outcome {
  bool ok = true;
  long checks = 0;
  std::string detail;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    } else if (!cond) {
      detail += "; " + what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
  double budget_seconds = 0;  // 0: no runtime bound
};

RatFun sym(const char* n) { return RatFun::parameter(n); }
Symbol symbol(const char* n) { return Symbol::intern(n); }

LaurentPoly oracle_member(families::Family f, long n, long nu) {
  using families::Family;
  switch (f) {
    case Family::Hermite: return oracle::hermite(n);
    case Family::Laguerre: return oracle::laguerre(n, RatFun(1));
    case Family::Legendre: return oracle::legendre(n);
    case Family::Gegenbauer: return oracle::gegenbauer(n, 1);
    case Family::Chebyshev1: return oracle::chebyshev1(n);
    case Family::Chebyshev2: return oracle::chebyshev2(n);
    case Family::ConfluentHG: return oracle::confluent(n, 2);
    case Family::Hypergeometric: return oracle::hypergeometric(n, 1, 2);
    case Family::Bessel: return oracle::bessel(nu, n);
  }
  return {};
}

Outcome table_reproduction() {
  using namespace families;
  Outcome o;
  for (Family f : all_families()) {
    const std::vector<long> nus = f == Family::Bessel ? std::vector<long>{0, 1, 2} : std::vector<long>{0};
    for (long nu : nus) {
      Bindings b{{symbol("alpha"), RatFun(1)},
                 {symbol("lambda"), RatFun(1)},
                 {symbol("gamma"), RatFun(2)},
                 {symbol("nu"), RatFun(nu)}};
      for (long n = 0; n <= 30; ++n) {
        const std::string tag = std::string(name(f)) + " n=" + std::to_string(n) +
                                (f == Family::Bessel ? " nu=" + std::to_string(nu) : "");
        DEReport r = verify_de(f, n, b);
        o.expect(r.member == oracle_member(f, n, nu), tag + " differs from the recurrence");
        // Bessel members are truncated series; the residual must sit above the cut
        o.expect(r.ok && (f == Family::Bessel || r.residual.is_zero()), tag + " residual");
      }
    }
  }
  for (long n = 0; n <= 15; ++n) {
    DEReport r = verify_de(Family::Laguerre, n);
    o.expect(r.member == oracle::laguerre(n, sym("alpha")), "symbolic Laguerre n=" + std::to_string(n));
    o.expect(r.residual.is_zero(), "symbolic Laguerre residual n=" + std::to_string(n));
  }
  return o;
}

Outcome harmonic_quantization() {
  Outcome o;
  spectra::HarmonicReport r = spectra::harmonic_quantization_check(40);
  o.expect(r.matches_at_half, "library check at E = 1/2");
  const auto series = r.series.body.evaluated({{spectra::energy_symbol(), Rational(1, 2)}});
  for (const auto& [k, c] : oracle::gaussian(Rational(1, 2), 40)) {
    o.expect(series.coeff(k) == RatFun(c), "x^" + std::to_string(k) + " at E = 1/2");
  }
  o.expect(series.degree() <= 40, "terms beyond x^40");
  for (long k = 1; k <= 40; k += 2) o.expect(series.coeff(k).is_zero(), "odd term");

  const auto wrong = r.series.body.evaluated({{spectra::energy_symbol(), Rational(3, 2)}});
  const auto gauss = oracle::gaussian(Rational(3, 2), 4);
  o.expect(!(wrong.coeff(4) == RatFun(gauss.at(4))), "x^4 at E = 3/2 should deviate");
  o.notes.push_back("x^4 at E = 3/2: series " + wrong.coeff(4).str() + ", exp(-3/2 x^2) " +
                    gauss.at(4).get_str());
  return o;
}

Outcome hermite_closed_form() {
  Outcome o;
  const DiffOp a = DiffOp::d(2) * RatFun(Rational(-1, 4));
  for (long n = 0; n <= 30; ++n) {
    ExpApplyResult r = exp_apply(a, LaurentPoly::monomial(n));
    LaurentPoly h = r.value * RatFun(Rational(mpz_class(1) << n));
    o.expect(r.terminated, "series did not terminate at n=" + std::to_string(n));
    o.expect(h == oracle::hermite(n), "n=" + std::to_string(n));
  }
  return o;
}

Outcome ladders() {
  using namespace families;
  Outcome o;
  for (LadderKind k : all_ladders()) {
    const bool coulomb = k == LadderKind::CoulombRaise || k == LadderKind::CoulombLower;
    LadderIdentity id = build_ladder(k);
    LadderReport r = verify_ladder(id, coulomb ? 8 : 20);
    o.expect(r.ok, std::string(name(k)) + " identity: " + r.detail);
    o.expect(r.printed_matches, std::string(name(k)) + " derived " + to_string(id.op) +
                                    " vs printed " + to_string(id.printed));
  }
  return o;
}

Outcome qes() {
  Outcome o;
  spectra::QESResult q = spectra::qes_sextic(4, Rational(1), 16);
  o.expect(q.alpha == Rational(-11), "alpha = " + q.alpha.get_str());
  std::set<Rational> energies;
  for (const auto& r : q.energies) {
    o.expect(r.exact.has_value(), "energy not rational");
    if (r.exact) energies.insert(*r.exact);
  }
  o.expect(energies == std::set<Rational>{Rational(-8), Rational(0), Rational(8)}, "energy set");

  auto poly = [](std::initializer_list<std::pair<long, Rational>> t) {
    LaurentPoly p;
    for (const auto& [k, c] : t) p.add_term(k, RatFun(c));
    return p;
  };
  const std::map<Rational, LaurentPoly> printed{
      {Rational(-8), poly({{0, 1}, {2, 4}, {4, 2}})},
      {Rational(0), poly({{0, 1}, {4, Rational(-2, 3)}})},
      {Rational(8), poly({{0, 1}, {2, -4}, {4, 2}})},
  };
  o.expect(q.eigen.size() == 3, "three eigenfunctions");
  for (const auto& e : q.eigen) {
    const std::string tag = "E = " + e.energy.get_str();
    auto it = printed.find(e.energy);
    if (it == printed.end()) {
      o.expect(false, tag + " unexpected");
      continue;
    }
    const RatFun s = e.psi.coeff(0) / it->second.coeff(0);
    o.expect(e.psi == it->second * s, tag + " eigenfunction");
    o.expect(e.residual.is_zero(), tag + " residual");
    o.expect(apply(spectra::qes_operator(q.g, q.alpha, RatFun(e.energy)), e.psi).is_zero(),
             tag + " gauged operator");
  }

  spectra::QESResult z = spectra::qes_sextic(0, Rational(1), 4);
  o.expect(z.eigen.size() == 1 && z.eigen[0].energy == 0, "n = 0 energy");
  o.expect(z.eigen.size() == 1 && z.eigen[0].psi == LaurentPoly::monomial(0), "n = 0 psi");
  return o;
}

Outcome anharmonic() {
  Outcome o;
  spectra::AnharmonicResult s = spectra::anharmonic_ground(sym("alpha"), sym("beta"), 8);
  o.expect(s.cubic_matches, "symbolic cubic");
  o.expect(s.cubic.size() == 4 && s.cubic[3] == RatFun(1) && s.cubic[2].is_zero() &&
               s.cubic[1] == -sym("alpha") && s.cubic[0] == sym("beta") * RatFun(Rational(-3, 2)),
           "cubic coefficients");

  spectra::AnharmonicResult h = spectra::anharmonic_ground(RatFun(1), RatFun(0), 8);
  o.expect(h.exact_e0 && *h.exact_e0 == 1, "(1, 0) root is not exactly 1");

  spectra::AnharmonicResult r = spectra::anharmonic_ground(RatFun(1), RatFun(Rational(1, 10)), 8, true);
  const auto closed = spectra::cubic_closed_form(1.0, 0.1);
  o.expect(closed.has_value() && r.closed_form_used, "closed form unavailable");
  if (r.e0 && r.oracle_e0) {
    const double v = *r.e0;
    const double res = std::abs(v * v * v - v - 0.15);
    o.expect(res <= 1e-12, "cubic residual");
    const double dev = std::abs(v - *r.oracle_e0) / *r.oracle_e0;
    o.expect(dev < 0.10, "deviation from the finite-difference oracle");
    // independent grid, not the library's own oracle call
    const double grid = oracle::fd_ground(1.0, 0.1, 10.0, 2001);
    o.expect(std::abs(v - grid) / grid < 0.10, "deviation from the test-side oracle");
    std::ostringstream ss;
    ss.precision(10);
    ss << "E0 = " << v << ", grid = " << grid << ", relative deviation " << dev
       << ", residual " << res;
    o.notes.push_back(ss.str());
  } else {
    o.expect(false, "no numeric root");
  }
  return o;
}

std::vector<std::pair<std::size_t, long>> manybody_cases() {
  std::vector<std::pair<std::size_t, long>> out;
  for (long w = 0; w <= 6; ++w) out.emplace_back(2, w);
  for (long w = 0; w <= 4; ++w) out.emplace_back(3, w);
  return out;
}

Outcome jack() {
  using namespace manybody;
  Outcome o;
  const RatFun b = sym("beta");
  SymPoly j = manybody::jack(Partition({2, 0}), b, 2);
  o.expect(sutherland_eigenvalue(Partition({2, 0}), b, 2) == RatFun(4) + RatFun(2) * b, "eigenvalue");
  o.expect(sutherland_residual(j, Partition({2, 0}), b, 2).is_zero(), "(2,0) residual");

  // as printed: m_{1,0}^2 = m_{2,0} + 2 m_{1,1}
  const RatFun c = RatFun(2) * b / (RatFun(1) + b);
  SymPoly literal = msf(Partition({2, 0}), 2);
  literal.add_term(Partition({2, 0}), c);
  literal.add_term(Partition({1, 1}), c * RatFun(2));
  SymPoly reread = msf(Partition({2, 0}), 2);
  reread.add_term(Partition({1, 1}), c);
  o.notes.push_back("computed: " + to_string(j));
  o.notes.push_back("printed:  m[2,0] + " + c.str() + "*m[1,0]^2");
  o.notes.push_back(std::string("printed, m[1,0]^2 expanded: residual ") +
                    (sutherland_residual(literal, Partition({2, 0}), b, 2).is_zero() ? "zero" : "nonzero") +
                    "; with m[1,0]^2 read as m[1,1]: " + (reread == j ? "equal" : "different"));

  const Symbol beta = symbol("beta");
  for (auto [n, w] : manybody_cases()) {
    for (const Partition& lam : partitions(w, n)) {
      const std::string tag = "N=" + std::to_string(n) + " (" + lam.str() + ")";
      SymPoly p = manybody::jack(lam, b, n);
      o.expect(sutherland_residual(p, lam, b, n).is_zero(), tag + " residual");
      o.expect(dominance_triangular(p, lam), tag + " triangularity");
      o.expect(p.evaluated({{beta, Rational(0)}}) == msf(lam, n), tag + " beta = 0 limit");
      bool exact = true;
      auto res = oracle::sutherland_residual(oracle::expand(p), n, b, sutherland_eigenvalue(lam, b, n), &exact);
      o.expect(exact && res.empty(), tag + " expanded residual");
    }
  }
  return o;
}

Outcome calogero() {
  using namespace manybody;
  Outcome o;
  const RatFun b = sym("beta");
  for (auto [n, w] : manybody_cases()) {
    for (const Partition& lam : partitions(w, n)) {
      const std::string tag = "N=" + std::to_string(n) + " (" + lam.str() + ")";
      CalogeroReport r = calogero_verify(lam, b, n);
      o.expect(r.ok && r.residual.is_zero(), tag);
      const RatFun e0 = RatFun(Rational(static_cast<long>(n), 2)) +
                        b * RatFun(Rational(static_cast<long>(n * (n - 1)), 2));
      o.expect(r.e0 == e0 && r.energy == e0 + RatFun(w), tag + " energy");
      bool exact = true;
      auto res = oracle::calogero_residual(oracle::expand(r.polynomial), n, b, w, &exact);
      o.expect(exact && res.empty(), tag + " expanded residual");
    }
  }
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome infrastructure() {
  Outcome o;
  selftest::Options opt;
  opt.random_cases = 1000;
  opt.fuzz_inputs = 100000;
  for (const auto& check : {selftest::grading_law(opt), selftest::normal_ordering(opt),
                            selftest::jacobi(opt), selftest::homomorphism(opt),
                            selftest::parser_fuzz(opt)}) {
    o.expect(check.ok && check.cases >= (check.name == "cli.parser_fuzz" ? 100000 : 1000),
             check.name + ": " + check.detail);
  }

  long json = 0;
  for (const auto& entry : fs::directory_iterator(fs::path(EULEROP_GOLDEN_DIR) / "out")) {
    const std::string text = slurp(entry.path());
    if (text.empty() || text.front() != '{') continue;
    ++json;
    o.expect(cli::reemit(text) == text, entry.path().filename().string() + " re-emission");
  }
  o.expect(json > 0, "no golden JSON found");
  o.notes.push_back(std::to_string(json) + " golden JSON documents re-emitted");

  const auto t0 = std::chrono::steady_clock::now();
  golden::Result r = golden::run_cli(EULEROP_CLI_PATH, "selftest");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.expect(r.code == 0, "selftest exit code " + std::to_string(r.code));
  o.expect(secs < 120, "selftest took " + std::to_string(secs) + " s");
  o.notes.push_back("selftest " + std::to_string(secs) + " s");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "family members against recurrences, zero DE residuals", table_reproduction, 10},
      {2, "harmonic series quantizes at E = 1/2", harmonic_quantization},
      {3, "Hermite closed form 2^n exp(-d^2/4) x^n", hermite_closed_form},
      {4, "ladder identities and printed operators", ladders},
      {5, "QES sextic at n = 4 and n = 0", qes},
      {6, "anharmonic cubic and ground state", anharmonic},
      {7, "Jack polynomials", jack},
      {8, "Calogero polynomials", calogero},
      {9, "algebra laws, parser fuzz, golden round trip, selftest", infrastructure},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.expect(false, "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds));
    }
    if (!o.ok) failed.insert(c.id);
    const char* tag = o.ok ? "PASS" : (kKnownRed.count(c.id) ? "FAIL (known)" : "FAIL");
    std::printf("[%s] %d. %s (%ld checks, %.2f s)\n", tag, c.id, c.title.c_str(), o.checks, secs);
    for (const auto& n : o.notes) std::printf("       %s\n", n.c_str());
    if (!o.ok) std::printf("       first failure: %s\n", o.detail.c_str());
    std::fflush(stdout);
  }

  std::size_t known = 0;
  for (int id : failed) known += kKnownRed.count(id);
  std::printf("%zu/%zu pass, %zu known red, %zu unexpected\n", criteria.size() - failed.size(),
              criteria.size(), known, failed.size() - known);
  for (int id : kKnownRed) {
    if (!failed.count(id)) std::printf("known-red criterion %d now passes; update the list\n", id);
  }
  return failed == kKnownRed ? 0 : 1;
}
