#include "eulerop/ratfun.hpp"

#include "eulerop/error.hpp"

namespace eulerop {

RatFun normalize(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "denominator is the zero polynomial");
  RatFun out;
  if (num.is_zero()) return out;
  if (den.is_constant()) {
    out.num_ = num * (Rational(1) / den.constant_term());
    return out;
  }
  MPoly n = num;
  MPoly d = den;
  MPoly g = gcd(n, d);
  if (!g.is_constant()) {
    n = *try_divide(n, g);
    d = *try_divide(d, g);
  }
  Rational lead = d.leading_term().second;
  Rational inv = Rational(1) / lead;
  out.num_ = n * inv;
  out.den_ = d * inv;
  return out;
}

std::optional<long> RatFun::as_integer() const {
  if (!is_constant()) return std::nullopt;
  Rational v = constant_value();
  if (v.get_den() != 1 || !v.get_num().fits_slong_p()) return std::nullopt;
  return v.get_num().get_si();
}

std::set<std::uint32_t> RatFun::variables() const {
  auto out = num_.variables();
  auto d = den_.variables();
  out.insert(d.begin(), d.end());
  return out;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroDenominator, "inverse of zero");
  return normalize(den_, num_);
}

RatFun RatFun::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun out;
  out.num_ = num_.pow(static_cast<unsigned>(e));
  out.den_ = den_.pow(static_cast<unsigned>(e));
  return out;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_constant()) {
      num_ += o.num_;
      return *this;
    }
    return *this = normalize(num_ + o.num_, den_);
  }
  if (den_.is_constant()) return *this = normalize(num_ * o.den_ + o.num_, o.den_);
  if (o.den_.is_constant()) return *this = normalize(num_ + o.num_ * den_, den_);
  MPoly g = gcd(den_, o.den_);
  MPoly a = *try_divide(den_, g);
  MPoly b = *try_divide(o.den_, g);
  return *this = normalize(num_ * b + o.num_ * a, a * o.den_);
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ *= o.num_;
    return *this;
  }
  if (o.is_constant()) {
    num_ *= o.constant_value();
    return *this;
  }
  if (is_constant()) {
    Rational c = constant_value();
    *this = o;
    num_ *= c;
    return *this;
  }
  // cross-cancel before multiplying keeps the gcd inputs small
  MPoly g1 = gcd(num_, o.den_);
  MPoly g2 = gcd(o.num_, den_);
  MPoly n1 = *try_divide(num_, g1);
  MPoly d2 = *try_divide(o.den_, g1);
  MPoly n2 = *try_divide(o.num_, g2);
  MPoly d1 = *try_divide(den_, g2);
  MPoly n = n1 * n2;
  MPoly d = d1 * d2;
  Rational inv = Rational(1) / d.leading_term().second;
  num_ = n * inv;
  den_ = d * inv;
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) { return *this *= o.inverse(); }

RatFun operator-(const RatFun& a) {
  RatFun out = a;
  out.num_ *= Rational(-1);
  return out;
}

RatFun evaluate(const RatFun& f, const std::map<Symbol, Rational>& bindings) {
  std::map<std::uint32_t, Rational> values;
  for (const auto& [s, v] : bindings) values.emplace(s.id(), v);
  MPoly den = f.denominator().substitute(values);
  if (den.is_zero()) throw Error(ErrorKind::EvaluationPole, "denominator " + f.str() + " vanishes");
  return normalize(f.numerator().substitute(values), den);
}

namespace {

RatFun substitute_poly(const MPoly& p, const std::map<std::uint32_t, RatFun>& values) {
  RatFun out;
  for (const auto& [m, c] : p.terms()) {
    RatFun t(c);
    Monomial rest;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) {
        rest = rest * Monomial::of(Symbol::from_id(v), e);
      } else {
        t *= it->second.pow(static_cast<int>(e));
      }
    }
    t *= RatFun(MPoly::term(rest, 1));
    out += t;
  }
  return out;
}

}  // namespace

RatFun substitute(const RatFun& f, const std::map<Symbol, RatFun>& values) {
  std::map<std::uint32_t, RatFun> by_id;
  for (const auto& [s, v] : values) by_id.emplace(s.id(), v);
  RatFun den = substitute_poly(f.denominator(), by_id);
  if (den.is_zero()) throw Error(ErrorKind::EvaluationPole, "denominator " + f.str() + " vanishes");
  return substitute_poly(f.numerator(), by_id) / den;
}

std::pair<MPoly, MPoly> integer_form(const RatFun& f) {
  if (f.is_zero()) return {MPoly{}, MPoly(1)};
  // one scale for both parts: clears all denominators, removes joint content
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const MPoly* p : {&f.numerator(), &f.denominator()}) {
    for (const auto& [m, c] : p->terms()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  for (const MPoly* p : {&f.numerator(), &f.denominator()}) {
    for (const auto& [m, c] : p->terms()) {
      Integer v = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
    }
  }
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  return {f.numerator() * s, f.denominator() * s};
}

std::string RatFun::str() const {
  auto [n, d] = integer_form(*this);
  if (d == MPoly(1)) return to_string(n);
  std::string ns = to_string(n);
  std::string ds = to_string(d);
  // a lone number or power of one parameter needs no parentheses
  auto plain = [](const std::string& t) { return t.find_first_of(" *") == std::string::npos; };
  const bool n_plain = plain(ns);
  const bool d_plain = plain(ds);
  return (n_plain ? ns : "(" + ns + ")") + "/" + (d_plain ? ds : "(" + ds + ")");
}

std::string coefficient_factor(const RatFun& c) {
  std::string s = c.str();
  // only a top-level sum needs parentheses; "(a + b)/(c + d)" is already a factor
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && s[i] == ' ') return "(" + s + ")";
  }
  return s;
}

bool leading_negative(const RatFun& c) {
  return !c.is_zero() && c.numerator().leading_term().second < 0;
}

}  // namespace eulerop
