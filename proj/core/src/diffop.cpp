#include "eulerop/diffop.hpp"

#include <algorithm>
#include <set>

#include "eulerop/error.hpp"

namespace eulerop {

namespace {

// k-th falling factorial of an arbitrary integer n
Integer falling(long n, long k) {
  Integer out = 1;
  for (long j = 0; j < k; ++j) out *= n - j;
  return out;
}

Integer binomial(long n, long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

DiffOp::DiffOp(const RatFun& c) {
  if (!c.is_zero()) terms_.emplace(Key{0, 0}, c);
}

DiffOp DiffOp::term(long x_power, long d_order, const RatFun& c) {
  if (d_order < 0) throw Error(ErrorKind::InvalidArgument, "negative derivative order");
  DiffOp op;
  if (!c.is_zero()) op.terms_.emplace(Key{x_power, d_order}, c);
  return op;
}

DiffOp DiffOp::multiplication(const LaurentPoly& p) {
  DiffOp op;
  for (const auto& [k, c] : p.terms()) op.terms_.emplace(Key{k, 0}, c);
  return op;
}

RatFun DiffOp::coeff(long x_power, long d_order) const {
  auto it = terms_.find(Key{x_power, d_order});
  return it == terms_.end() ? RatFun() : it->second;
}

long DiffOp::order() const {
  long b = 0;
  for (const auto& [k, c] : terms_) b = std::max(b, k.d_order);
  return b;
}

std::vector<long> DiffOp::degrees() const {
  std::set<long> s;
  for (const auto& [k, c] : terms_) s.insert(k.x_power - k.d_order);
  return {s.begin(), s.end()};
}

DiffOp DiffOp::homogeneous_part(long degree) const {
  DiffOp out;
  for (const auto& [k, c] : terms_) {
    if (k.x_power - k.d_order == degree) out.terms_.emplace(k, c);
  }
  return out;
}

bool DiffOp::preserves_polynomials() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.x_power >= 0; });
}

std::optional<LaurentPoly> DiffOp::as_multiplier() const {
  LaurentPoly p;
  for (const auto& [k, c] : terms_) {
    if (k.d_order != 0) return std::nullopt;
    p.add_term(k.x_power, c);
  }
  return p;
}

DiffOp DiffOp::evaluated(const std::map<Symbol, Rational>& bindings) const {
  DiffOp out;
  for (const auto& [k, c] : terms_) out.add_term(k.x_power, k.d_order, evaluate(c, bindings));
  return out;
}

DiffOp DiffOp::substituted(const std::map<Symbol, RatFun>& values) const {
  DiffOp out;
  for (const auto& [k, c] : terms_) out.add_term(k.x_power, k.d_order, substitute(c, values));
  return out;
}

void DiffOp::add_term(long x_power, long d_order, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{x_power, d_order}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.x_power, k.d_order, c);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.x_power, k.d_order, -c);
  return *this;
}

DiffOp& DiffOp::operator*=(const RatFun& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& [k, v] : terms_) v *= c;
  }
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  DiffOp out;
  // (x^p d^q)(x^r d^s) = sum_j C(q,j) r^(j falling) x^(p+r-j) d^(q-j+s)
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      RatFun c = ca * cb;
      for (long j = 0; j <= ka.d_order; ++j) {
        Integer w = binomial(ka.d_order, j) * falling(kb.x_power, j);
        if (w == 0) break;  // falling factorial stays zero once it hits zero
        out.add_term(ka.x_power + kb.x_power - j, ka.d_order - j + kb.d_order,
                     c * RatFun(Rational(w)));
      }
    }
  }
  return out;
}

DiffOp DiffOp::pow(unsigned e) const {
  DiffOp out(RatFun(1));
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

LaurentPoly apply(const DiffOp& op, const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [k, c] : op.terms()) {
    for (const auto& [e, v] : p.terms()) {
      Integer w = falling(e, k.d_order);
      if (w == 0) continue;
      out.add_term(e - k.d_order + k.x_power, c * v * RatFun(Rational(w)));
    }
  }
  return out;
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

DiffOp conjugate(const DiffOp& a, const DiffOp& b, int max_depth) {
  DiffOp result = b;
  DiffOp nested = b;
  for (int k = 1; k <= max_depth; ++k) {
    nested = commutator(nested, a) * RatFun(Rational(1, k));
    if (nested.is_zero()) return result;
    result += nested;
  }
  throw Error(ErrorKind::NonTerminatingBCH,
              "nested commutator still nonzero at depth " + std::to_string(max_depth));
}

ExpApplyResult exp_apply(const DiffOp& a, const LaurentPoly& p, std::optional<int> cutoff) {
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
    term = apply(a, term) * RatFun(Rational(1, m));
    if (term.is_zero()) {
      out.terminated = true;
      out.terms_used = m;
      return out;
    }
    out.value += term;
    out.terms_used = m + 1;
  }
  out.terminated = term.is_zero();
  return out;
}

Gauge Gauge::exponential(const RatFun& c, long k) {
  Gauge g;
  g.factors_.push_back(Factor{Factor::Kind::Exponential, c, k});
  return g;
}

Gauge Gauge::power(const RatFun& l) {
  Gauge g;
  g.factors_.push_back(Factor{Factor::Kind::Power, l, 0});
  return g;
}

Gauge Gauge::operator*(const Gauge& o) const {
  Gauge g = *this;
  g.factors_.insert(g.factors_.end(), o.factors_.begin(), o.factors_.end());
  return g;
}

Gauge Gauge::inverse() const {
  Gauge g = *this;
  for (auto& f : g.factors_) f.c = -f.c;
  return g;
}

LaurentPoly Gauge::log_derivative() const {
  LaurentPoly w;
  for (const auto& f : factors_) {
    if (f.kind == Factor::Kind::Exponential) {
      w.add_term(f.k - 1, f.c * RatFun(f.k));
    } else {
      w.add_term(-1, f.c);
    }
  }
  return w;
}

DiffOp gauge_transform(const DiffOp& op, const Gauge& g) {
  const DiffOp shifted_d = DiffOp::d() + DiffOp::multiplication(g.log_derivative());
  DiffOp out;
  for (const auto& [k, c] : op.terms()) {
    out += DiffOp::term(k.x_power, 0, c) * shifted_d.pow(static_cast<unsigned>(k.d_order));
  }
  return out;
}

}  // namespace eulerop
