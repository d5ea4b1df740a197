#include <doctest.h>

#include <random>
#include <sstream>

#include "eulerop/error.hpp"
#include "eulerop/expr.hpp"
#include "eulerop/families.hpp"
#include "eulerop_cli/app.hpp"
#include "eulerop_cli/io.hpp"

using namespace eulerop;
using eulerop::cli::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "eulerop");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

LaurentPoly mono(long k, const RatFun& c = RatFun(1)) { return LaurentPoly::monomial(k, c); }

}  // namespace

TEST_CASE("D*(D-1) lowers to x^2 d^2") {
  DiffOp op = parse_operator("D*(D-1)", {});
  CHECK(op == DiffOp::term(2, 2));
  CHECK(op.coeff(1, 1).is_zero());
  for (long k = 0; k <= 5; ++k) CHECK(apply(op, mono(k)) == mono(k, RatFun(k * (k - 1))));
}

TEST_CASE("Laguerre B from text") {
  DiffOp b = parse_operator("x*d^2 + (alpha+1)*d", ParamSet{"alpha"});
  RatFun a = RatFun::parameter("alpha");
  CHECK(b == DiffOp::term(1, 2) + DiffOp::d() * (a + RatFun(1)));
  CHECK(to_string(b) == "x*d^2 + (alpha + 1)*d");
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_operator("d^-1", {});
    FAIL("no throw");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 3);
  }
  try {
    parse_expr("x +\n  * d");
    FAIL("no throw");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  for (const char* bad : {"", "(x", "x)", "x^", "x y", "2 3", "x^300", "@"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_expr(bad), SyntaxError);
  }
}

TEST_CASE("lowering errors") {
  auto kind = [](const char* src, const ParamSet& ps) {
    try {
      parse_operator(src, ps);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind("gamma*x", {}) == ErrorKind::UnknownParameter);
  CHECK(kind("x/0", {}) == ErrorKind::ZeroDenominator);
  CHECK(kind("x/d", {}) == ErrorKind::SyntaxError);
  CHECK(kind("x/(x+1)", {}) == ErrorKind::SyntaxError);
  CHECK(parse_operator("l*(l+1)/x", ParamSet{"l"}) ==
        DiffOp::x(-1) * (RatFun::parameter("l") * (RatFun::parameter("l") + RatFun(1))));
  CHECK(parse_scalar("(2 + 4*E^2)/24", ParamSet{"E"}).str() == "(2*E^2 + 1)/12");
  CHECK_THROWS_AS(parse_scalar("x + 1", {}), Error);
}

TEST_CASE("printing round trips") {
  ParamSet ps{"alpha", "l", "E"};
  for (const char* src :
       {"x*d^2 + (alpha+1)*d", "-(x - d)^2", "x/4 - x*d + x*d^2 + 2*d - l*(l+1)/x - 1",
        "D*(D-1) + x^2*(2*E - x^2)", "a - (b - c)", "-x^2", "(-x)^2", "x/(2*l)"}) {
    CAPTURE(src);
    OpExpr e = parse_expr(src);
    CHECK(parse_expr(print(e)) == e);
  }
  for (const char* src : {"x*d^2 - x*d + 2*d + 1/4*x - 1 - (l^2 + l)/x", "-1/x*d + x", "0",
                          "(alpha + 1)*x^3*d^4 - E/2"}) {
    DiffOp op = parse_operator(src, ps);
    CHECK(parse_operator(to_string(op), ps) == op);
  }
  CHECK(to_string(parse_operator("x - 1/x*d", {})) == "-1/x*d + x");
}

TEST_CASE("random operators round trip through text") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-9, 9), xp(-3, 4), dp(0, 4), den(1, 5);
  ParamSet ps{"alpha"};
  RatFun a = RatFun::parameter("alpha");
  for (int i = 0; i < 300; ++i) {
    DiffOp op;
    for (int t = 0; t < 4; ++t) {
      RatFun c = RatFun(Rational(coef(rng), den(rng)));
      if (t % 2 == 1) c *= a + RatFun(coef(rng));
      op.add_term(xp(rng), dp(rng), c);
    }
    CHECK(parse_operator(to_string(op), ps) == op);
  }
}

TEST_CASE("fuzzed token strings never crash") {
  const std::vector<std::string> tokens{"x", "d", "D", "1", "2", "10", "alpha", "+", "-",
                                        "*", "/", "^", "(", ")", " ", "3"};
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> pick(0, tokens.size() - 1), len(0, 12);
  long parsed = 0;
  for (int i = 0; i < 5000; ++i) {
    std::string s;
    for (std::size_t k = len(rng); k > 0; --k) s += tokens[pick(rng)];
    try {
      OpExpr e = parse_expr(s);
      CHECK(parse_expr(print(e)) == e);
      ++parsed;
    } catch (const SyntaxError& e) {
      CHECK(e.column() >= 1);
    }
  }
  CHECK(parsed > 100);
}

TEST_CASE("polynomial JSON") {
  LaurentPoly h3 = families::generate(families::Family::Hermite, 3);
  CHECK(cli::dump(cli::polynomial_json(h3)) ==
        "{\"variable\":\"x\",\"terms\":[{\"exp\":3,\"coeff\":\"8\"},{\"exp\":1,\"coeff\":\"-12\"}]}\n");
  CHECK(cli::read_polynomial(cli::polynomial_json(h3)) == h3);
  LaurentPoly sym = families::generate(families::Family::Laguerre, 3);
  CHECK(cli::read_polynomial(cli::polynomial_json(sym)) == sym);
  CHECK(cli::polynomial_csv(h3) == "exp,coeff\n3,8\n1,-12\n");
}

TEST_CASE("m-basis JSON") {
  manybody::SymPoly j = manybody::jack(manybody::Partition({2, 0}), RatFun::parameter("beta"), 2);
  Json doc = cli::sympoly_json(j);
  CHECK(doc["basis"] == "m");
  CHECK(doc["N"] == 2);
  CHECK(doc["terms"][1]["coeff"] == "(2*beta)/(beta + 1)");
  CHECK(cli::read_sympoly(doc) == j);
}

TEST_CASE("re-emission is byte identical") {
  std::string text = cli::dump(cli::polynomial_json(families::generate(families::Family::Legendre, 6)));
  CHECK(cli::reemit(text) == text);
}

TEST_CASE("LaTeX rendering") {
  CHECK(cli::latex(RatFun::parameter("alpha") / RatFun(2)) == "\\frac{\\alpha}{2}");
  CHECK(cli::latex(families::generate(families::Family::Hermite, 2)) == "4 x^{2} - 2");
}

TEST_CASE("in-process commands and exit codes") {
  Run g = run({"gen", "--family", "hermite", "--n", "3", "--format", "json"});
  CHECK(g.code == 0);
  CHECK(g.out == "{\"variable\":\"x\",\"terms\":[{\"exp\":3,\"coeff\":\"8\"},{\"exp\":1,\"coeff\":\"-12\"}]}\n");

  Run s = run({"solve", "--f", "D*(D-1)", "--p", "x^2*(2*E - x^2)", "--params", "E", "--lambda",
               "0", "--cutoff", "4"});
  REQUIRE(s.code == 0);
  Json sj = Json::parse(s.out)["solutions"][0];
  CHECK(sj["lambda"] == 0);
  CHECK(sj["terms"][0]["coeff"] == "(2*E^2 + 1)/12");
  CHECK(sj["terms"][1]["coeff"] == "-E");
  CHECK(cli::read_polynomial(sj) ==
        mono(0) - mono(2, RatFun::parameter("E")) +
            mono(4, parse_scalar("(2 + 4*E^2)/24", ParamSet{"E"})));

  Run q = run({"qes", "sextic", "--n", "4", "--gamma", "1", "--format", "json"});
  REQUIRE(q.code == 0);
  Json qj = Json::parse(q.out);
  CHECK(qj["alpha"] == "-11");
  CHECK(qj["energies"] == Json::array({"0", "8", "-8"}));

  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"gen", "--family", "jacobi", "--n", "2"}).code == cli::kUsage);
  CHECK(run({"solve", "--f", "D*(D-1)", "--p", "x^2*gamma"}).code == cli::kUsage);
  CHECK(run({"solve", "--f", "D*(D-1)", "--p", "x^2*(", "--lambda", "0"}).code == cli::kUsage);
  CHECK(run({"qes", "sextic", "--n", "4", "--gamma", "2"}).code == cli::kUsage);
  CHECK(run({"solve", "--f", "(D-1)*(D+2)", "--p", "x", "--lambda", "-2", "--cutoff", "4"}).code ==
        cli::kMathError);
  CHECK(run({"gen", "--family", "hermite", "--n", "3", "--format", "yaml"}).code == cli::kUsage);
}
