#include "eulerop_cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "eulerop/error.hpp"
#include "eulerop/expr.hpp"
#include "eulerop/families.hpp"
#include "eulerop/manybody.hpp"
#include "eulerop/selftest.hpp"
#include "eulerop/spectra.hpp"
#include "eulerop_cli/io.hpp"

namespace eulerop::cli {

namespace {

// Malformed input discovered after CLI11 has accepted the flags.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "json";
  std::string out;
  std::string params;
  std::vector<std::string> binds;
  long cutoff = kUnset;
  static constexpr long kUnset = -1;
};

struct Output {
  Json doc;
  std::string csv;
  std::string latex;
  int code = kOk;
};

template <class F>
auto input(F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

ParamSet declared(const Common& c) {
  ParamSet ps;
  std::stringstream ss(c.params);
  std::string name;
  while (std::getline(ss, name, ',')) {
    name.erase(0, name.find_first_not_of(' '));
    name.erase(name.find_last_not_of(' ') + 1);
    if (name.empty()) continue;
    if (!is_valid_identifier(name) || name == "x" || name == "d" || name == "D") {
      throw UsageError("invalid parameter name '" + name + "'");
    }
    ps.declare(name);
  }
  for (const auto& b : c.binds) ps.declare(b.substr(0, b.find('=')));
  return ps;
}

std::map<Symbol, RatFun> bindings(const Common& c) {
  std::map<Symbol, RatFun> out;
  for (const auto& b : c.binds) {
    const auto eq = b.find('=');
    if (eq == std::string::npos) throw UsageError("--bind expects name=value, got '" + b + "'");
    const std::string name = b.substr(0, eq);
    if (!is_valid_identifier(name)) throw UsageError("invalid parameter name '" + name + "'");
    out[Symbol::intern(name)] = input([&] { return parse_scalar(b.substr(eq + 1), ParamSet{}); });
  }
  return out;
}

long cutoff_or(const Common& c, long fallback) {
  return c.cutoff == Common::kUnset ? fallback : c.cutoff;
}

Rational rational_value(const RatFun& f, const std::string& what) {
  if (!f.numerator().is_constant() || !f.denominator().is_constant()) {
    throw UsageError(what + " must be a number");
  }
  return f.numerator().constant_term() / f.denominator().constant_term();
}

int max_depth_from_env() {
  const char* v = std::getenv("EULEROP_MAX_DEPTH");
  if (v == nullptr || *v == '\0') return kDefaultBchDepth;
  char* end = nullptr;
  const long d = std::strtol(v, &end, 10);
  if (*end != '\0' || d < 1 || d > 100000) {
    throw UsageError(std::string("EULEROP_MAX_DEPTH must be a positive integer, got '") + v + "'");
  }
  return static_cast<int>(d);
}

std::string gauge_string(const Gauge& g) {
  std::string out;
  for (const auto& f : g.factors()) {
    if (!out.empty()) out += "*";
    if (f.kind == Gauge::Factor::Kind::Power) {
      out += "x^(" + f.c.str() + ")";
    } else {
      out += "exp(" + coefficient_factor(f.c) + "*x" + (f.k == 1 ? "" : "^" + std::to_string(f.k)) + ")";
    }
  }
  return out;
}

std::string kv_csv(const std::vector<std::pair<std::string, std::string>>& rows) {
  std::string out = "field,value\n";
  for (const auto& [k, v] : rows) out += csv_field(k) + "," + csv_field(v) + "\n";
  return out;
}

// ---------------------------------------------------------------------------

Output cmd_gen(const Common& c, const std::string& family, long n, bool swap) {
  const auto f = input([&] { return families::family_from_name(family); });
  const auto b = bindings(c);
  const LaurentPoly p = families::generate(f, n, b, families::Options{swap});
  return {polynomial_json(p), polynomial_csv(p), latex(p) + "\n"};
}

Output cmd_verify(const Common& c, const std::string& family, long n, long n_max, bool swap) {
  const auto b = bindings(c);
  std::vector<families::Family> fams;
  if (family == "all") {
    fams = families::all_families();
  } else {
    fams.push_back(input([&] { return families::family_from_name(family); }));
  }
  const long lo = n_max >= 0 ? 0 : n;
  const long hi = n_max >= 0 ? n_max : n;
  Output o;
  Json checks = Json::array();
  std::string csv = "family,n,ok\n", tex;
  bool all_ok = true;
  for (auto f : fams) {
    families::Bindings fb;
    for (const auto& p : families::parameters(f)) {
      auto it = b.find(Symbol::intern(p));
      if (it != b.end()) fb.insert(*it);
    }
    for (long k = lo; k <= hi; ++k) {
      const auto r = families::verify_de(f, k, fb, families::Options{swap});
      all_ok = all_ok && r.ok;
      Json row{{"family", families::name(f)}, {"n", k}, {"ok", r.ok},
               {"member", polynomial_json(r.member)}, {"residual", polynomial_json(r.residual)}};
      if (r.allowed_above) row["residual_allowed_above"] = *r.allowed_above;
      checks.push_back(row);
      csv += std::string(families::name(f)) + "," + std::to_string(k) + "," +
             (r.ok ? "true" : "false") + "\n";
      tex += std::string(families::name(f)) + "_{" + std::to_string(k) + "}(x) = " +
             latex(r.member) + "\\\\\n";
    }
  }
  o.doc = Json{{"checks", checks}, {"ok", all_ok}};
  o.csv = csv;
  o.latex = tex;
  o.code = all_ok ? kOk : kVerificationFailed;
  return o;
}

Output cmd_solve(const Common& c, const std::string& f_src, const std::string& p_src,
                 std::optional<long> lambda) {
  const ParamSet ps = declared(c);
  const auto b = bindings(c);
  DiffOp f_op = input([&] { return parse_operator(f_src, ps); }).substituted(b);
  DiffOp p_op = input([&] { return parse_operator(p_src, ps); }).substituted(b);
  const solve::DPoly f = input([&] { return solve::to_dpoly(f_op); });
  const solve::EulerEquation eq = input([&] { return solve::EulerEquation(f, p_op); });
  const long cutoff = cutoff_or(c, 10);

  const auto roots = solve::indicial_roots(f);
  std::vector<long> lambdas;
  if (lambda) {
    lambdas.push_back(*lambda);
  } else {
    lambdas = roots.integer;
  }
  Json sols = Json::array();
  std::string csv = "lambda,exp,coeff\n", tex;
  for (long l : lambdas) {
    const auto s = solve::series_solve(eq, l, cutoff);
    Json sol = polynomial_json(s.body);
    sol["lambda"] = l;
    sol["cutoff"] = s.cutoff;
    sol["terminated"] = s.terminated;
    sol["residual_degree"] = s.residual_degree;
    sols.push_back(sol);
    for (auto it = s.body.terms().rbegin(); it != s.body.terms().rend(); ++it) {
      csv += std::to_string(l) + "," + std::to_string(it->first) + "," +
             csv_field(it->second.str()) + "\n";
    }
    tex += "y_{" + std::to_string(l) + "}(x) = " + latex(s.body) + "\\\\\n";
  }
  Json symbolic = Json::array();
  for (const auto& r : roots.symbolic) symbolic.push_back(r.str());
  Output o;
  o.doc = Json{{"equation", to_string(eq.full_operator())},
               {"indicial_roots", roots.integer},
               {"symbolic_roots", symbolic},
               {"solutions", sols}};
  o.csv = csv;
  o.latex = tex;
  return o;
}

Json ladder_json(const families::LadderIdentity& id, const families::LadderReport& r) {
  Json j{{"kind", families::name(id.kind)},
         {"operator", to_string(id.op)},
         {"printed", to_string(id.printed)},
         {"printed_matches", r.printed_matches},
         {"shift_n", id.shift_n},
         {"shift_alpha", id.shift_alpha},
         {"factor", id.factor.str()},
         {"factor_squared", id.factor_squared},
         {"gauge", id.gauge ? Json(gauge_string(*id.gauge)) : Json(nullptr)},
         {"checked", r.checked},
         {"ok", r.ok},
         {"first_failure", r.first_failure ? Json(*r.first_failure) : Json(nullptr)}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Output cmd_ladder(const std::string& kind, long n_max) {
  const int depth = max_depth_from_env();
  std::vector<families::LadderKind> kinds;
  if (kind == "all") {
    kinds = families::all_ladders();
  } else {
    kinds.push_back(input([&] { return families::ladder_from_name(kind); }));
  }
  Output o;
  Json rows = Json::array();
  std::string csv = "kind,operator,factor,checked,ok,printed_matches\n", tex;
  bool all_ok = true;
  for (auto k : kinds) {
    const bool coulomb =
        k == families::LadderKind::CoulombRaise || k == families::LadderKind::CoulombLower;
    const auto id = families::build_ladder(k, depth);
    const auto r = families::verify_ladder(id, n_max >= 0 ? n_max : (coulomb ? 8 : 20));
    all_ok = all_ok && r.ok;
    rows.push_back(ladder_json(id, r));
    csv += std::string(families::name(k)) + "," + csv_field(to_string(id.op)) + "," +
           csv_field(id.factor.str()) + "," + std::to_string(r.checked) + "," +
           (r.ok ? "true" : "false") + "," + (r.printed_matches ? "true" : "false") + "\n";
    tex += std::string(families::name(k)) + ": " + latex(id.op) + "\\\\\n";
  }
  o.doc = kinds.size() == 1 ? rows[0] : Json{{"ladders", rows}, {"ok", all_ok}};
  o.csv = csv;
  o.latex = tex;
  o.code = all_ok ? kOk : kVerificationFailed;
  return o;
}

Output cmd_qes(const Common& c, long n, const std::string& gamma_src, const std::string& g_src) {
  Rational gamma;
  if (!g_src.empty()) {
    const Rational g = rational_value(input([&] { return parse_scalar(g_src, ParamSet{}); }), "--g");
    gamma = g * g;
  } else {
    gamma = rational_value(input([&] { return parse_scalar(gamma_src, ParamSet{}); }), "--gamma");
  }
  if (n < 0 || n % 2) throw UsageError("--n must be even and nonnegative");
  if (gamma <= 0 || mpz_perfect_square_p(gamma.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(gamma.get_den_mpz_t()) == 0) {
    throw UsageError("--gamma must be the square of a positive rational");
  }
  const auto r = spectra::qes_sextic(n, gamma, cutoff_or(c, n + 12));

  // 0 first, then by magnitude, positive before negative
  std::vector<spectra::RealRoot> roots = r.energies;
  std::stable_sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    const double ma = std::abs(a.approx), mb = std::abs(b.approx);
    if (ma != mb) return ma < mb;
    return a.approx > b.approx;
  });
  Json exact = Json::array(), decimals = Json::array(), isolated = Json::array();
  std::string csv = "energy,decimal\n";
  for (const auto& e : roots) {
    if (e.exact) {
      exact.push_back(e.exact->get_str());
      csv += e.exact->get_str() + "," + decimal(*e.exact) + "\n";
    } else {
      isolated.push_back(Json{{"lo", e.lo.get_str()}, {"hi", e.hi.get_str()},
                              {"decimal", decimal(e.approx)}});
      csv += "," + decimal(e.approx) + "\n";
    }
    decimals.push_back(decimal(e.approx));
  }
  bool ok = r.higher_vanish;
  Json eigen = Json::array();
  std::string tex = "E^{" + std::to_string(n / 2 + 1) + "}\\text{-polynomial: } " +
                    latex(RatFun(r.energy_polynomial)) + "\\\\\n";
  for (const auto& e : roots) {
    if (!e.exact) continue;
    const auto it = std::find_if(r.eigen.begin(), r.eigen.end(),
                                 [&](const auto& ev) { return ev.energy == *e.exact; });
    ok = ok && it->residual.is_zero();
    eigen.push_back(Json{{"energy", it->energy.get_str()},
                         {"psi", polynomial_json(it->psi)},
                         {"gauge_b", r.b.get_str()},
                         {"residual_zero", it->residual.is_zero()}});
    tex += "E = " + latex(RatFun(it->energy)) + ": \\tilde\\psi = " + latex(it->psi) + "\\\\\n";
  }
  Output o;
  o.doc = Json{{"n", n},
               {"gamma", r.gamma.get_str()},
               {"g", r.g.get_str()},
               {"alpha", r.alpha.get_str()},
               {"b", r.b.get_str()},
               {"energy_polynomial", RatFun(r.energy_polynomial).str()},
               {"higher_vanish", r.higher_vanish},
               {"energies", exact},
               {"energies_decimal", decimals},
               {"isolated_energies", isolated},
               {"eigenfunctions", eigen}};
  o.csv = csv;
  o.latex = tex;
  o.code = ok ? kOk : kVerificationFailed;
  return o;
}

Output cmd_anharmonic(const Common& c, const std::string& a_src, const std::string& b_src,
                      bool oracle, double tolerance) {
  const ParamSet ps = declared(c);
  const auto bind = bindings(c);
  const RatFun a = substitute(input([&] { return parse_scalar(a_src, ps); }), bind);
  const RatFun b = substitute(input([&] { return parse_scalar(b_src, ps); }), bind);
  const auto r = spectra::anharmonic_ground(a, b, cutoff_or(c, 8), oracle);

  LaurentPoly cubic;
  for (std::size_t k = 0; k < r.cubic.size(); ++k) cubic.add_term(static_cast<long>(k), r.cubic[k]);
  Output o;
  Json j{{"alpha", r.alpha.str()},
         {"beta", r.beta.str()},
         {"c2", r.c2.str()},
         {"c4", r.c4.str()},
         {"c6", r.c6.str()},
         {"mu", r.mu.str()},
         {"nu", r.nu.str()},
         {"cubic", polynomial_json(cubic, "E")},
         {"cubic_matches", r.cubic_matches}};
  std::vector<std::pair<std::string, std::string>> rows = {
      {"alpha", r.alpha.str()}, {"beta", r.beta.str()}, {"mu", r.mu.str()},
      {"nu", r.nu.str()}, {"cubic_matches", r.cubic_matches ? "true" : "false"}};
  if (r.exact_e0) {
    j["exact_e0"] = r.exact_e0->get_str();
    rows.emplace_back("exact_e0", r.exact_e0->get_str());
  }
  if (r.e0) {
    j["e0"] = decimal(*r.e0);
    j["cubic_residual"] = decimal(*r.cubic_residual);
    j["closed_form_used"] = r.closed_form_used;
    rows.emplace_back("e0", decimal(*r.e0));
    rows.emplace_back("cubic_residual", decimal(*r.cubic_residual));
  }
  if (r.oracle_e0 && r.e0) {
    const double dev = std::abs(*r.e0 - *r.oracle_e0) / std::abs(*r.oracle_e0);
    j["oracle_e0"] = decimal(*r.oracle_e0);
    j["relative_deviation"] = decimal(dev);
    j["within_tolerance"] = dev <= tolerance;
    rows.emplace_back("oracle_e0", decimal(*r.oracle_e0));
    rows.emplace_back("relative_deviation", decimal(dev));
    if (dev > tolerance) o.code = kVerificationFailed;
  }
  o.doc = j;
  o.csv = kv_csv(rows);
  o.latex = latex(cubic, "E") + " = 0\\\\\n\\mu = " + latex(r.mu) + ",\\quad \\nu = " +
            latex(r.nu) + "\\\\\n";
  return o;
}

manybody::Partition read_partition(const std::string& s) {
  std::vector<long> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    char* end = nullptr;
    const long v = std::strtol(tok.c_str(), &end, 10);
    if (tok.empty() || *end != '\0' || v < 0) throw UsageError("bad partition '" + s + "'");
    parts.push_back(v);
  }
  if (parts.empty()) throw UsageError("empty partition");
  return manybody::Partition(parts);
}

RatFun beta_value(const Common& c, const std::string& beta_src) {
  const auto b = bindings(c);
  if (!beta_src.empty()) {
    ParamSet ps = declared(c);
    ps.declare("beta");
    return substitute(input([&] { return parse_scalar(beta_src, ps); }), b);
  }
  return substitute(RatFun::parameter("beta"), b);
}

Output cmd_jack(const Common& c, const std::string& part, std::size_t n, const std::string& beta_src) {
  const auto lam = read_partition(part);
  const std::size_t particles = n ? n : lam.parts.size();
  const RatFun beta = beta_value(c, beta_src);
  const auto padded = input([&] { return lam.padded(particles); });
  const auto j = manybody::jack(padded, beta, particles);
  const bool ok = manybody::sutherland_residual(j, padded, beta, particles).is_zero() &&
                  manybody::dominance_triangular(j, padded);
  return {sympoly_json(j), sympoly_csv(j), latex(j) + "\n", ok ? kOk : kVerificationFailed};
}

Output cmd_calogero(const Common& c, const std::string& part, std::size_t n,
                    const std::string& beta_src) {
  const auto lam = read_partition(part);
  const std::size_t particles = n ? n : lam.parts.size();
  const RatFun beta = beta_value(c, beta_src);
  const auto padded = input([&] { return lam.padded(particles); });
  const auto r = manybody::calogero_verify(padded, beta, particles);
  Output o;
  o.doc = Json{{"polynomial", sympoly_json(r.polynomial)},
               {"e0", r.e0.str()},
               {"energy", r.energy.str()},
               {"residual_zero", r.residual.is_zero()},
               {"ok", r.ok}};
  o.csv = sympoly_csv(r.polynomial);
  o.latex = "P = " + latex(r.polynomial) + ",\\quad E = " + latex(r.energy) + "\n";
  o.code = r.ok ? kOk : kVerificationFailed;
  return o;
}

Output cmd_selftest(long cases, long fuzz, std::uint64_t seed, std::ostream& err) {
  selftest::Options opt;
  opt.random_cases = cases;
  opt.fuzz_inputs = fuzz;
  opt.seed = seed;
  opt.max_depth = max_depth_from_env();
  const auto t0 = std::chrono::steady_clock::now();
  const auto checks = selftest::run_all(opt, [&](const selftest::Check& ch) {
    err << (ch.ok ? "[pass] " : "[FAIL] ") << ch.name << " (" << ch.cases << " cases, "
        << decimal(ch.seconds) << " s)" << (ch.detail.empty() ? "" : ": " + ch.detail) << "\n";
  });
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Json rows = Json::array();
  std::string csv = "check,ok,cases,seconds\n", tex = "\\begin{tabular}{lrr}\n";
  bool ok = true;
  for (const auto& ch : checks) {
    ok = ok && ch.ok;
    rows.push_back(Json{{"name", ch.name}, {"ok", ch.ok}, {"cases", ch.cases},
                        {"seconds", decimal(ch.seconds)}, {"detail", ch.detail}});
    csv += ch.name + "," + (ch.ok ? "true" : "false") + "," + std::to_string(ch.cases) + "," +
           decimal(ch.seconds) + "\n";
    tex += "\\texttt{" + ch.name + "} & " + (ch.ok ? "pass" : "fail") + " & " +
           std::to_string(ch.cases) + " \\\\\n";
  }
  tex += "\\end{tabular}\n";
  return {Json{{"checks", rows}, {"ok", ok}, {"seconds", decimal(seconds)}}, csv, tex,
          ok ? kOk : kVerificationFailed};
}

void add_common(CLI::App* app, Common& c, bool with_cutoff) {
  app->add_option("--format", c.format, "json, csv or latex")
      ->check(CLI::IsMember({"json", "csv", "latex"}));
  app->add_option("--out", c.out, "write the document to this file");
  app->add_option("--params", c.params, "comma-separated symbolic parameter names");
  app->add_option("--bind", c.binds, "name=value, exact rational")->allow_extra_args(false);
  if (with_cutoff) {
    app->add_option("--cutoff", c.cutoff, "series cutoff degree")->check(CLI::NonNegativeNumber);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler-operator method: exact series, families, spectra and many-body checks",
               "eulerop"};
  app.require_subcommand(1);
  Common c;
  std::function<Output()> action;

  std::string family, kind, f_src, p_src, gamma = "1", g, alpha = "1", beta = "0", part,
                                                                          beta_src;
  long n = 0, n_max = -1, lambda = 0, cases = 1000, fuzz = 100000;
  std::uint64_t seed = selftest::Options{}.seed;
  std::size_t particles = 0;
  bool swap = false, oracle = false;
  double tolerance = 0.1;

  auto* gen = app.add_subcommand("gen", "generate a family member");
  add_common(gen, c, false);
  gen->add_option("--family", family, "family name")->required();
  gen->add_option("--n", n, "degree")->required()->check(CLI::NonNegativeNumber);
  gen->add_flag("--swap", swap, "hypergeometric: use the other numerator parameter");
  gen->callback([&] { action = [&] { return cmd_gen(c, family, n, swap); }; });

  auto* ver = app.add_subcommand("verify", "apply the family differential equation");
  add_common(ver, c, false);
  ver->add_option("--family", family, "family name or 'all'")->required();
  auto* ver_n = ver->add_option("--n", n, "degree")->check(CLI::NonNegativeNumber);
  ver->add_option("--n-max", n_max, "check every degree 0..n-max")
      ->check(CLI::NonNegativeNumber)
      ->excludes(ver_n);
  ver->add_flag("--swap", swap, "hypergeometric: use the other numerator parameter");
  ver->callback([&] { action = [&] { return cmd_verify(c, family, n, n_max, swap); }; });

  auto* sol = app.add_subcommand("solve", "series solution of [F(D) + P] y = 0");
  add_common(sol, c, true);
  sol->add_option("--f", f_src, "F(D), degree-zero operator")->required();
  sol->add_option("--p", p_src, "P, the graded remainder")->required();
  auto* lam_opt = sol->add_option("--lambda", lambda, "indicial root (default: all integer roots)");
  sol->callback([&] {
    action = [&] {
      return cmd_solve(c, f_src, p_src,
                       lam_opt->count() ? std::optional<long>(lambda) : std::nullopt);
    };
  });

  auto* lad = app.add_subcommand("ladder", "build and verify a ladder identity");
  add_common(lad, c, false);
  lad->add_option("--kind", kind, "ladder name or 'all'")->required();
  lad->add_option("--n-max", n_max, "highest level checked")->check(CLI::NonNegativeNumber);
  lad->callback([&] { action = [&] { return cmd_ladder(kind, n_max); }; });

  auto* qes = app.add_subcommand("qes", "quasi-exactly solvable models");
  qes->require_subcommand(1);
  auto* sextic = qes->add_subcommand("sextic", "sextic oscillator at the QES coupling");
  add_common(sextic, c, true);
  sextic->add_option("--n", n, "highest even degree")->required();
  auto* gamma_opt = sextic->add_option("--gamma", gamma, "x^6 coupling, a rational square");
  sextic->add_option("--g", g, "square root of gamma")->excludes(gamma_opt);
  sextic->callback([&] { action = [&] { return cmd_qes(c, n, gamma, g); }; });

  auto* anh = app.add_subcommand("anharmonic", "ground state of -d^2 + alpha x^2 + beta x^4");
  add_common(anh, c, true);
  anh->add_option("--alpha", alpha, "x^2 coupling");
  anh->add_option("--beta", beta, "x^4 coupling");
  anh->add_flag("--oracle", oracle, "compare with a finite-difference ground state");
  anh->add_option("--tolerance", tolerance, "relative tolerance against the oracle");
  anh->callback([&] { action = [&] { return cmd_anharmonic(c, alpha, beta, oracle, tolerance); }; });

  auto* jk = app.add_subcommand("jack", "symmetric Sutherland eigenfunction in the m basis");
  add_common(jk, c, false);
  jk->add_option("--partition", part, "comma-separated parts, e.g. 2,0")->required();
  jk->add_option("-N,--particles", particles, "particle count (default: number of parts)");
  jk->add_option("--beta", beta_src, "coupling (default: symbolic beta)");
  jk->callback([&] { action = [&] { return cmd_jack(c, part, particles, beta_src); }; });

  auto* cal = app.add_subcommand("calogero", "Calogero polynomial eigenfunction");
  add_common(cal, c, false);
  cal->add_option("--partition", part, "comma-separated parts")->required();
  cal->add_option("-N,--particles", particles, "particle count (default: number of parts)");
  cal->add_option("--beta", beta_src, "coupling (default: symbolic beta)");
  cal->callback([&] { action = [&] { return cmd_calogero(c, part, particles, beta_src); }; });

  auto* st = app.add_subcommand("selftest", "run the invariant suite");
  add_common(st, c, false);
  st->add_option("--cases", cases, "randomized cases per algebra law")->check(CLI::PositiveNumber);
  st->add_option("--fuzz", fuzz, "random parser inputs")->check(CLI::NonNegativeNumber);
  st->add_option("--seed", seed, "random seed");
  st->callback([&] { action = [&] { return cmd_selftest(cases, fuzz, seed, err); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Output o;
  try {
    o = action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_error(e.kind()) ? kUsage : kMathError;
  }

  const Format fmt = format_from_name(c.format);
  const std::string text = fmt == Format::Json  ? dump(o.doc)
                           : fmt == Format::Csv ? o.csv
                                                : o.latex;
  if (c.out.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f || !(f << text)) {
      err << "error: cannot write " << c.out << "\n";
      return kUsage;
    }
  }
  return o.code;
}

}  // namespace eulerop::cli
