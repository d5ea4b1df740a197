#include "eulerop/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "eulerop/error.hpp"

namespace eulerop {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Symbol s, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(s.id(), exponent);
  return m;
}

std::uint32_t Monomial::degree_in(std::uint32_t id) const {
  for (const auto& [v, e] : factors_) {
    if (v == id) return e;
    if (v > id) break;
  }
  return 0;
}

std::uint32_t Monomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  Monomial out;
  auto a = factors_.begin();
  for (const auto& [v, e] : other.factors_) {
    while (a != factors_.end() && a->first < v) out.factors_.push_back(*a++);
    if (a == factors_.end() || a->first != v || a->second < e) return std::nullopt;
    if (a->second > e) out.factors_.emplace_back(v, a->second - e);
    ++a;
  }
  while (a != factors_.end()) out.factors_.push_back(*a++);
  return out;
}

Monomial Monomial::without(std::uint32_t id) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first != id) out.factors_.push_back(f);
  }
  return out;
}

Monomial Monomial::with_power(std::uint32_t id, std::uint32_t exponent) const {
  Monomial out = without(id);
  if (exponent == 0) return out;
  auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), Factor{id, 0});
  out.factors_.insert(it, Factor{id, exponent});
  return out;
}

namespace {

std::vector<std::pair<std::string, std::uint32_t>> named_factors(const Monomial& m) {
  std::vector<std::pair<std::string, std::uint32_t>> out;
  out.reserve(m.factors().size());
  for (const auto& [v, e] : m.factors()) out.emplace_back(Symbol::from_id(v).name(), e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int print_order_compare(const Monomial& a, const Monomial& b) {
  auto da = a.total_degree();
  auto db = b.total_degree();
  if (da != db) return da > db ? -1 : 1;
  if (a == b) return 0;
  auto na = named_factors(a);
  auto nb = named_factors(b);
  // the larger exponent on the alphabetically first variable comes first
  for (std::size_t i = 0; i < na.size() && i < nb.size(); ++i) {
    if (na[i].first != nb[i].first) return na[i].first < nb[i].first ? -1 : 1;
    if (na[i].second != nb[i].second) return na[i].second > nb[i].second ? -1 : 1;
  }
  if (na.size() != nb.size()) return na.size() > nb.size() ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------------------
// MPoly arithmetic

// Callers may hand in unreduced fractions such as Rational(4, 4).
MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c).first->second.canonicalize();
}

MPoly::MPoly(long c) : MPoly(Rational(c)) {}

MPoly MPoly::variable(Symbol s) { return term(Monomial::of(s), 1); }

MPoly MPoly::term(const Monomial& m, const Rational& c) {
  MPoly p;
  if (c != 0) p.terms_.emplace(m, c).first->second.canonicalize();
  return p;
}

bool MPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<std::uint32_t> MPoly::variables() const {
  std::set<std::uint32_t> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.insert(f.first);
  }
  return out;
}

std::uint32_t MPoly::degree_in(std::uint32_t id) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(id));
  return d;
}

std::uint32_t MPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

std::vector<MPoly> MPoly::coefficients_in(std::uint32_t id) const {
  std::vector<MPoly> out(is_zero() ? 0 : degree_in(id) + 1);
  for (const auto& [m, c] : terms_) {
    out[m.degree_in(id)].terms_.emplace(m.without(id), c);
  }
  return out;
}

MPoly MPoly::from_coefficients(std::uint32_t id, const std::vector<MPoly>& coeffs) {
  MPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& [m, c] : coeffs[k].terms_) {
      out.terms_.emplace(m.with_power(id, static_cast<std::uint32_t>(k)), c);
    }
  }
  return out;
}

std::pair<Monomial, Rational> MPoly::leading_term() const {
  if (terms_.empty()) return {Monomial{}, Rational(0)};
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (print_order_compare(it->first, best->first) < 0) best = it;
  }
  return *best;
}

MPoly MPoly::substitute(const std::map<std::uint32_t, Rational>& values) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial rest;
    Rational coeff = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = values.find(v);
      if (it == values.end()) {
        rest = rest * Monomial::of(Symbol::from_id(v), e);
      } else {
        Rational p = 1;
        for (std::uint32_t k = 0; k < e; ++k) p *= it->second;
        coeff *= p;
      }
    }
    out.add_term(rest, coeff);
  }
  return out;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) {
    it->second.canonicalize();
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  if (a.is_constant()) return b * a.terms_.begin()->second;
  if (b.is_constant()) return a * b.terms_.begin()->second;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MPoly operator-(const MPoly& a) { return a * Rational(-1); }

// ---------------------------------------------------------------------------
// Division, GCD, square root

namespace {

// Variable that division/gcd recursion splits on: the smallest id present.
std::uint32_t main_variable(const MPoly& p) { return *p.variables().begin(); }

MPoly shifted(const MPoly& p, std::uint32_t id, std::uint32_t k) {
  if (k == 0) return p;
  return p * MPoly::term(Monomial::of(Symbol::from_id(id), k), 1);
}

}  // namespace

std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroDenominator, "polynomial division by zero");
  if (a.is_zero()) return MPoly{};
  if (b.is_constant()) return a * (Rational(1) / b.constant_term());
  if (a.is_constant()) return std::nullopt;

  const std::uint32_t v = main_variable(b);
  const auto bc = b.coefficients_in(v);
  const std::uint32_t db = static_cast<std::uint32_t>(bc.size() - 1);
  const MPoly& lb = bc.back();

  MPoly rem = a;
  MPoly quot;
  while (!rem.is_zero()) {
    const auto dr = rem.degree_in(v);
    if (dr < db) return std::nullopt;
    MPoly lr = rem.coefficients_in(v)[dr];
    auto t = try_divide(lr, lb);
    if (!t) return std::nullopt;
    MPoly step = shifted(*t, v, dr - db);
    quot += step;
    rem -= step * b;
  }
  return quot;
}

Rational integer_normaliser(const MPoly& p) {
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  if (num_gcd == 0) return 1;
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  if (p.leading_term().second < 0) s = -s;
  return s;
}

namespace {

MPoly monic(const MPoly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading_term().second);
}

// Storage-independent integer scaling used to limit coefficient growth.
MPoly primitive_scaled(const MPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational s(den_lcm, num_gcd);
  s.canonicalize();
  return p * s;
}

// Dense univariate Euclid over Q.
using Dense = std::vector<Rational>;

Dense to_dense(const MPoly& p, std::uint32_t v) {
  Dense out(p.is_zero() ? 0 : p.degree_in(v) + 1);
  for (const auto& [m, c] : p.terms()) out[m.degree_in(v)] = c;
  return out;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

Dense dense_rem(Dense a, const Dense& b) {
  const auto db = b.size() - 1;
  const Rational& lb = b.back();
  while (a.size() >= b.size()) {
    Rational q = a.back() / lb;
    const auto shift = a.size() - 1 - db;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= q * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

MPoly univariate_gcd(const MPoly& a, const MPoly& b, std::uint32_t v) {
  Dense x = to_dense(a, v);
  Dense y = to_dense(b, v);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = dense_rem(x, y);
    // keep coefficient sizes in check
    if (!r.empty()) {
      Rational lead = r.back();
      for (auto& c : r) c /= lead;
    }
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<MPoly> coeffs;
  coeffs.reserve(x.size());
  for (const auto& c : x) coeffs.emplace_back(c);
  return MPoly::from_coefficients(v, coeffs);
}

MPoly gcd_rec(const MPoly& a, const MPoly& b);

MPoly content_in(const std::vector<MPoly>& coeffs) {
  MPoly g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gcd_rec(g, c);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

MPoly divide_or_throw(const MPoly& a, const MPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw Error(ErrorKind::DivisionRemainder, "inexact polynomial division in gcd");
  return *q;
}

// Pseudo-remainder of a by b with respect to v.
MPoly prem(const MPoly& a, const MPoly& b, std::uint32_t v) {
  const auto db = b.degree_in(v);
  const MPoly lb = b.coefficients_in(v).back();
  MPoly r = a;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const auto dr = r.degree_in(v);
    MPoly lr = r.coefficients_in(v)[dr];
    r = r * lb - shifted(lr, v, dr - db) * b;
    r = primitive_scaled(r);
  }
  return r;
}

// Heuristic gcd on integer polynomials: evaluate one variable at a large
// integer xi, recurse, rebuild the candidate from its balanced xi-adic digits
// and accept it only if it divides both inputs.

Integer max_norm(const MPoly& p) {
  Integer m = 0;
  for (const auto& [mono, c] : p.terms()) {
    Integer v = abs(c.get_num());
    if (v > m) m = v;
  }
  return m;
}

Integer int_content(const MPoly& p) {
  Integer g = 0;
  for (const auto& [m, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  return g;
}

// Primitive integer polynomial with positive leading coefficient.
MPoly int_primitive(const MPoly& p) {
  if (p.is_zero()) return p;
  Rational s(1, int_content(p));
  if (p.leading_term().second < 0) s = -s;
  return p * s;
}

MPoly eval_at(const MPoly& p, std::uint32_t v, const Integer& xi) {
  MPoly out;
  std::vector<MPoly> coeffs = p.coefficients_in(v);
  Integer power = 1;
  for (const auto& c : coeffs) {
    if (!c.is_zero()) out += c * Rational(power);
    power *= xi;
  }
  return out;
}

MPoly interpolate(const MPoly& h, std::uint32_t v, const Integer& xi) {
  MPoly out;
  const Integer half = xi / 2;
  for (const auto& [m, c] : h.terms()) {
    Integer rest = c.get_num();
    for (std::uint32_t k = 0; rest != 0; ++k) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), rest.get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r != 0) out += MPoly::term(m.with_power(v, k), Rational(r));
      rest = (rest - r) / xi;
    }
  }
  return out;
}

bool divides(const MPoly& d, const MPoly& p) { return !d.is_zero() && try_divide(p, d).has_value(); }

std::optional<MPoly> heu_gcd(MPoly f, MPoly g) {
  if (f.is_zero()) return int_primitive(g) * Rational(int_content(g));
  if (g.is_zero()) return int_primitive(f) * Rational(int_content(f));
  Integer c = gcd(int_content(f), int_content(g));
  if (f.is_constant() || g.is_constant()) return MPoly(Rational(c));
  f *= Rational(1, c);
  g *= Rational(1, c);

  std::set<std::uint32_t> vars = f.variables();
  for (auto v : g.variables()) vars.insert(v);
  const std::uint32_t v = *vars.rbegin();

  const Integer nf = max_norm(f), ng = max_norm(g);
  const Integer b = 2 * std::min(nf, ng) + 29;
  Integer xi = std::min(b, Integer(99 * sqrt(b)));
  const Integer lf = abs(f.leading_term().second.get_num());
  const Integer lg = abs(g.leading_term().second.get_num());
  xi = std::max(xi, Integer(2 * std::min(Integer(nf / lf), Integer(ng / lg)) + 2));

  for (int attempt = 0; attempt < 6; ++attempt) {
    MPoly ff = eval_at(f, v, xi), gg = eval_at(g, v, xi);
    if (!ff.is_zero() && !gg.is_zero()) {
      auto h = heu_gcd(ff, gg);
      if (!h) return std::nullopt;
      MPoly cand = int_primitive(interpolate(*h, v, xi));
      if (divides(cand, f) && divides(cand, g)) return cand * Rational(c);
      // cofactor route
      for (const auto* pair : {&ff, &gg}) {
        auto co = try_divide(*pair, *h);
        if (!co) continue;
        MPoly cf = int_primitive(interpolate(*co, v, xi));
        const MPoly& whole = pair == &ff ? f : g;
        const MPoly& other = pair == &ff ? g : f;
        if (cf.is_zero()) continue;
        auto q = try_divide(whole, cf);
        if (!q) continue;
        MPoly cand2 = int_primitive(*q);
        if (divides(cand2, other) && divides(cand2, whole)) return cand2 * Rational(c);
      }
    }
    xi = xi * 73794 * Integer(sqrt(Integer(sqrt(xi)))) / 27011;
  }
  return std::nullopt;
}

MPoly gcd_rec(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return MPoly(1);

  auto va = a.variables();
  auto vb = b.variables();
  std::set<std::uint32_t> all = va;
  all.insert(vb.begin(), vb.end());
  if (all.size() == 1) return univariate_gcd(a, b, *all.begin());

  // A variable present in only one argument cannot occur in the gcd.
  for (auto v : va) {
    if (!vb.count(v)) {
      auto coeffs = a.coefficients_in(v);
      coeffs.push_back(b);
      return content_in(coeffs);
    }
  }
  for (auto v : vb) {
    if (!va.count(v)) {
      auto coeffs = b.coefficients_in(v);
      coeffs.push_back(a);
      return content_in(coeffs);
    }
  }

  if (a.total_degree() >= b.total_degree()) {
    if (try_divide(a, b)) return b;
  } else if (try_divide(b, a)) {
    return a;
  }

  if (auto h = heu_gcd(primitive_scaled(a), primitive_scaled(b))) return *h;

  const std::uint32_t v = *all.begin();
  MPoly ca = content_in(a.coefficients_in(v));
  MPoly cb = content_in(b.coefficients_in(v));
  MPoly pa = divide_or_throw(a, ca);
  MPoly pb = divide_or_throw(b, cb);
  MPoly c = gcd_rec(ca, cb);

  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero() && pb.degree_in(v) > 0) {
    MPoly r = prem(pa, pb, v);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = MPoly{};
    } else {
      pb = divide_or_throw(r, content_in(r.coefficients_in(v)));
    }
  }
  MPoly g = pb.is_zero() ? pa : MPoly(1);
  return c * g;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) { return monic(gcd_rec(a, b)); }

std::optional<MPoly> sqrt(const MPoly& p) {
  if (p.is_zero()) return MPoly{};
  auto [lm, lc] = p.leading_term();
  if (lc < 0) return std::nullopt;
  if (!mpz_perfect_square_p(lc.get_num_mpz_t()) || !mpz_perfect_square_p(lc.get_den_mpz_t())) {
    return std::nullopt;
  }
  Monomial root_m;
  for (const auto& [v, e] : lm.factors()) {
    if (e % 2 != 0) return std::nullopt;
    root_m = root_m * Monomial::of(Symbol::from_id(v), e / 2);
  }
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), lc.get_num_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), lc.get_den_mpz_t());
  const Rational root_c(rn, rd);

  MPoly r = MPoly::term(root_m, root_c);
  MPoly rem = p - r * r;
  // each step cancels the leading term of rem, which strictly decreases in a
  // graded order, so the loop is finite
  while (!rem.is_zero()) {
    auto [m, c] = rem.leading_term();
    auto q = m.divide(root_m);
    if (!q) return std::nullopt;
    if (print_order_compare(*q, root_m) <= 0) return std::nullopt;
    MPoly t = MPoly::term(*q, c / (2 * root_c));
    r += t;
    rem = p - r * r;
  }
  return r;
}

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return print_order_compare(x.first, y.first) < 0;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    auto named = named_factors(m);
    bool wrote = false;
    if (a != 1 || named.empty()) {
      os << a.get_str();
      wrote = true;
    }
    for (const auto& [name, e] : named) {
      if (wrote) os << '*';
      os << name;
      if (e != 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace eulerop
