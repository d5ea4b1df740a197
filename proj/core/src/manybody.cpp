#include "eulerop/manybody.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "eulerop/error.hpp"

namespace eulerop::manybody {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<long> p) : parts(std::move(p)) {
  for (long v : parts) {
    if (v < 0) throw Error(ErrorKind::InvalidArgument, "partition parts must be nonnegative");
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

Partition Partition::padded(std::size_t n) const {
  if (length() > n) {
    throw Error(ErrorKind::TooManyParts, "partition " + str() + " has more than " +
                                             std::to_string(n) + " nonzero parts");
  }
  Partition out;
  out.parts.assign(parts.begin(), parts.begin() + static_cast<long>(std::min(n, parts.size())));
  out.parts.resize(n, 0);
  return out;
}

long Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0L); }

long Partition::sum_of_squares() const {
  long s = 0;
  for (long v : parts) s += v * v;
  return s;
}

std::size_t Partition::length() const {
  return static_cast<std::size_t>(std::count_if(parts.begin(), parts.end(), [](long v) { return v != 0; }));
}

std::string Partition::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s;
}

std::vector<Partition> partitions(long weight, std::size_t n) {
  std::vector<Partition> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long remaining, long max_part) {
    if (remaining == 0) {
      Partition p;
      p.parts = cur;
      p.parts.resize(n, 0);
      out.push_back(p);
      return;
    }
    if (cur.size() == n) return;
    for (long v = std::min(remaining, max_part); v >= 1; --v) {
      cur.push_back(v);
      rec(remaining - v, v);
      cur.pop_back();
    }
  };
  if (n == 0) return out;
  rec(weight, weight);
  return out;
}

bool dominates(const Partition& a, const Partition& b) {
  long sa = 0, sb = 0;
  const std::size_t len = std::max(a.parts.size(), b.parts.size());
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.parts.size() ? a.parts[i] : 0;
    sb += i < b.parts.size() ? b.parts[i] : 0;
    if (sa < sb) return false;
  }
  return sa == sb;
}

// ---------------------------------------------------------------------------
// ZPoly

ZPoly ZPoly::constant(std::size_t n, const RatFun& c) {
  ZPoly p(n);
  p.add_term(Exponents(n, 0), c);
  return p;
}

RatFun ZPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RatFun() : it->second;
}

void ZPoly::add_term(const Exponents& e, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool ZPoly::is_symmetric() const {
  for (std::size_t i = 0; i + 1 < n_; ++i) {
    for (const auto& [e, c] : terms_) {
      Exponents s = e;
      std::swap(s[i], s[i + 1]);
      if (!(coeff(s) == c)) return false;
    }
  }
  return true;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ZPoly& ZPoly::operator*=(const RatFun& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly out(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ZPoly::Exponents e(a.n_);
      for (std::size_t i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

namespace {

ZPoly shift(const ZPoly& p, std::size_t var, long by) {
  ZPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    auto f = e;
    f[var] += by;
    out.add_term(f, c);
  }
  return out;
}

ZPoly partial(const ZPoly& p, std::size_t var) {
  ZPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    auto f = e;
    f[var] -= 1;
    out.add_term(f, c * RatFun(e[var]));
  }
  return out;
}

// (D_i - D_j) p
ZPoly euler_difference(const ZPoly& p, std::size_t i, std::size_t j) {
  ZPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) out.add_term(e, c * RatFun(e[i] - e[j]));
  return out;
}

}  // namespace

ZPoly divide_difference(const ZPoly& p, std::size_t i, std::size_t j) {
  // synthetic division by (z_i - z_j) in z_i
  std::map<long, ZPoly> by_power;
  for (const auto& [e, c] : p.terms()) {
    auto f = e;
    f[i] = 0;
    auto [it, ins] = by_power.try_emplace(e[i], ZPoly(p.vars()));
    it->second.add_term(f, c);
  }
  ZPoly quotient(p.vars());
  if (by_power.empty()) return quotient;
  const long top = by_power.rbegin()->first;
  ZPoly b(p.vars());  // b_k, running from the top
  for (long k = top; k >= 1; --k) {
    auto it = by_power.find(k);
    b = shift(b, j, 1);
    if (it != by_power.end()) b += it->second;
    quotient += shift(b, i, k - 1);
  }
  ZPoly remainder = shift(b, j, 1);
  if (auto it = by_power.find(0); it != by_power.end()) remainder += it->second;
  if (!remainder.is_zero()) {
    throw Error(ErrorKind::DivisionRemainder, "division by (z" + std::to_string(i + 1) + " - z" +
                                                  std::to_string(j + 1) + ") leaves a remainder");
  }
  return quotient;
}

ZPoly euler_square_sum(const ZPoly& p) {
  ZPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    long s = 0;
    for (long v : e) s += v * v;
    out.add_term(e, c * RatFun(s));
  }
  return out;
}

ZPoly euler_sum(const ZPoly& p) {
  ZPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    out.add_term(e, c * RatFun(std::accumulate(e.begin(), e.end(), 0L)));
  }
  return out;
}

ZPoly sutherland_offdiag(const ZPoly& p) {
  const std::size_t n = p.vars();
  ZPoly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ZPoly q = euler_difference(p, i, j);
      if (q.is_zero()) continue;
      q = shift(q, i, 1) + shift(q, j, 1);
      out += divide_difference(q, i, j);
    }
  }
  return out;
}

ZPoly calogero_a(const ZPoly& p, const RatFun& beta) {
  const std::size_t n = p.vars();
  ZPoly kinetic(n), pair(n);
  for (std::size_t i = 0; i < n; ++i) kinetic += partial(partial(p, i), i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ZPoly q = partial(p, i) - partial(p, j);
      if (!q.is_zero()) pair += divide_difference(q, i, j);
    }
  }
  return kinetic * RatFun(Rational(1, 2)) + pair * beta;
}

// ---------------------------------------------------------------------------
// SymPoly

RatFun SymPoly::coeff(const Partition& p) const {
  auto it = terms.find(p);
  return it == terms.end() ? RatFun() : it->second;
}

void SymPoly::add_term(const Partition& p, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

ZPoly msf_expand(const Partition& lam, std::size_t n) {
  Partition p = lam.padded(n);
  std::vector<long> e(p.parts.rbegin(), p.parts.rend());  // ascending
  ZPoly out(n);
  do {
    out.add_term(e, RatFun(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

SymPoly msf(const Partition& lam, std::size_t n) {
  SymPoly s;
  s.n = n;
  s.add_term(lam.padded(n), RatFun(1));
  return s;
}

ZPoly SymPoly::expand() const {
  ZPoly out(n);
  for (const auto& [p, c] : terms) out += msf_expand(p, n) * c;
  return out;
}

SymPoly SymPoly::from_expanded(const ZPoly& p) {
  SymPoly s;
  s.n = p.vars();
  for (const auto& [e, c] : p.terms()) {
    if (std::is_sorted(e.begin(), e.end(), std::greater<>())) {
      Partition part;
      part.parts = e;
      s.add_term(part, c);
    }
  }
  if (!(s.expand() == p)) throw Error(ErrorKind::InvalidArgument, "polynomial is not symmetric");
  return s;
}

SymPoly SymPoly::evaluated(const std::map<Symbol, Rational>& bindings) const {
  SymPoly out;
  out.n = n;
  for (const auto& [p, c] : terms) out.add_term(p, evaluate(c, bindings));
  return out;
}

std::string to_string(const SymPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    const bool neg = leading_negative(it->second);
    const std::string cs = (neg ? -it->second : it->second).str();
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (cs != "1") os << coefficient_factor(neg ? -it->second : it->second) << '*';
    os << "m[" << it->first.str() << ']';
  }
  return os.str();
}

std::string to_string(const ZPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const bool neg = leading_negative(it->second);
    const std::string cs = (neg ? -it->second : it->second).str();
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      long e = it->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var + std::to_string(i + 1);
      if (e != 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty()) {
      os << cs;
    } else {
      if (cs != "1") os << coefficient_factor(neg ? -it->second : it->second) << '*';
      os << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Sutherland / Jack

RatFun sutherland_eigenvalue(const Partition& lam, const RatFun& beta, std::size_t n) {
  Partition p = lam.padded(n);
  RatFun out;
  for (std::size_t i = 0; i < n; ++i) {
    const long li = p.parts[i];
    const long w = static_cast<long>(n) + 1 - 2 * static_cast<long>(i + 1);
    out += RatFun(li * li) + beta * RatFun(w * li);
  }
  return out;
}

SymPoly sutherland_apply(const SymPoly& p, const Partition& lam, const RatFun& beta, std::size_t n) {
  const Partition l = lam.padded(n);
  const RatFun scalar = RatFun(l.sum_of_squares()) - sutherland_eigenvalue(l, beta, n);
  ZPoly e = p.expand();
  ZPoly out = sutherland_offdiag(e) * beta + e * scalar;
  return SymPoly::from_expanded(out);
}

SymPoly sutherland_residual(const SymPoly& p, const Partition& lam, const RatFun& beta,
                            std::size_t n) {
  ZPoly e = p.expand();
  ZPoly out = euler_square_sum(e) + sutherland_offdiag(e) * beta -
              e * sutherland_eigenvalue(lam.padded(n), beta, n);
  return SymPoly::from_expanded(out);
}

SymPoly jack(const Partition& lam, const RatFun& beta, std::size_t n) {
  const Partition l = lam.padded(n);
  std::vector<Partition> basis;
  for (const auto& mu : partitions(l.weight(), n)) {
    if (dominates(l, mu)) basis.push_back(mu);
  }
  // reverse lexicographic order refines dominance, so Z is triangular here
  std::map<Partition, SymPoly> z_cols;
  for (const auto& mu : basis) z_cols[mu] = sutherland_apply(msf(mu, n), l, beta, n);

  const long target = l.sum_of_squares();
  std::map<Partition, RatFun> c;
  c[l] = RatFun(1);
  SymPoly out = msf(l, n);
  for (const auto& mu : basis) {
    if (mu == l) continue;
    RatFun rhs;
    for (const auto& [nu, cn] : c) rhs += z_cols[nu].coeff(mu) * cn;
    const RatFun denom = RatFun(mu.sum_of_squares() - target) + z_cols[mu].coeff(mu);
    if (denom.is_zero()) {
      throw Error(ErrorKind::DegenerateDenominator,
                  "eigenvalues of m[" + mu.str() + "] and m[" + l.str() + "] coincide");
    }
    RatFun cm = -rhs / denom;
    c[mu] = cm;
    out.add_term(mu, cm);
  }
  return out;
}

bool dominance_triangular(const SymPoly& p, const Partition& lam) {
  const Partition l = lam.padded(p.n);
  if (!p.coeff(l).is_one()) return false;
  for (const auto& [mu, c] : p.terms) {
    if (!dominates(l, mu)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Calogero

SymPoly calogero_polynomial(const Partition& lam, const RatFun& beta, std::size_t n) {
  ZPoly term = msf_expand(lam, n);
  ZPoly sum = term;
  for (long k = 1; !term.is_zero(); ++k) {
    term = calogero_a(term, beta) * RatFun(Rational(-1, 2 * k));
    sum += term;
  }
  return SymPoly::from_expanded(sum);
}

CalogeroReport calogero_verify(const Partition& lam, const RatFun& beta, std::size_t n) {
  CalogeroReport rep;
  rep.polynomial = calogero_polynomial(lam, beta, n);
  ZPoly p = rep.polynomial.expand();
  const long w = lam.weight();
  rep.residual = euler_sum(p) - p * RatFun(w) - calogero_a(p, beta);
  const auto nn = static_cast<long>(n);
  rep.e0 = RatFun(Rational(nn, 2)) + beta * RatFun(Rational(nn * (nn - 1), 2));
  rep.energy = rep.e0 + RatFun(w);
  rep.ok = rep.residual.is_zero();
  return rep;
}

}  // namespace eulerop::manybody
