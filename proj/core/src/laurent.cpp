#include "eulerop/laurent.hpp"

#include <sstream>

namespace eulerop {

LaurentPoly::LaurentPoly(const RatFun& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(long k, const RatFun& c) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace(k, c);
  return p;
}

RatFun LaurentPoly::coeff(long k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? RatFun() : it->second;
}

void LaurentPoly::add_term(long k, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::truncated(long lo, long hi) const {
  LaurentPoly out;
  for (auto it = terms_.lower_bound(lo); it != terms_.end() && it->first <= hi; ++it) {
    out.terms_.insert(*it);
  }
  return out;
}

LaurentPoly LaurentPoly::evaluated(const std::map<Symbol, Rational>& bindings) const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) out.add_term(k, evaluate(c, bindings));
  return out;
}

LaurentPoly LaurentPoly::substituted(const std::map<Symbol, RatFun>& values) const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) out.add_term(k, substitute(c, values));
  return out;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, k % 2 == 0 ? c : -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const RatFun& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& [k, v] : terms_) v *= c;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
  }
  return out;
}

std::string to_string(const LaurentPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [k, c0] = *it;
    const bool negative = leading_negative(c0);
    const std::string cs = (negative ? -c0 : c0).str();
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << cs;
      continue;
    }
    if (cs != "1") os << coefficient_factor(negative ? -c0 : c0) << '*';
    os << var;
    if (k != 1) os << '^' << k;
  }
  return os.str();
}

}  // namespace eulerop
