#pragma once

// Reference values computed without the library's solvers: three-term
// recurrences, explicit series, and a plain numeric eigensolver. Only the
// coefficient types (mpq_class, RatFun) are shared with the code under test.

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "eulerop/laurent.hpp"
#include "eulerop/manybody.hpp"
#include "eulerop/ratfun.hpp"

namespace oracle {

using eulerop::LaurentPoly;
using eulerop::RatFun;

// Dense polynomial in x, index = power.
template <class T>
using Dense = std::vector<T>;

template <class T>
Dense<T> add(Dense<T> a, const Dense<T>& b) {
  if (a.size() < b.size()) a.resize(b.size(), T(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
Dense<T> scale(Dense<T> a, const T& c) {
  for (auto& v : a) v *= c;
  return a;
}

template <class T>
Dense<T> shift_x(const Dense<T>& a) {
  Dense<T> out(a.size() + 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i + 1] = a[i];
  return out;
}

// P_{n+1} = (a_n + b_n x) P_n + c_n P_{n-1}, returns P_n.
template <class T, class Step>
Dense<T> three_term(long n, Dense<T> p0, Dense<T> p1, Step step) {
  if (n == 0) return p0;
  for (long k = 1; k < n; ++k) {
    auto [a, b, c] = step(k);
    Dense<T> next = add(add(scale(p1, a), scale(shift_x(p1), b)), scale(p0, c));
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return p1;
}

template <class T>
LaurentPoly to_laurent(const Dense<T>& p) {
  LaurentPoly out;
  for (std::size_t i = 0; i < p.size(); ++i) out.add_term(static_cast<long>(i), RatFun(p[i]));
  return out;
}

inline LaurentPoly hermite(long n) {
  using Q = mpq_class;
  return to_laurent(three_term<Q>(n, {Q(1)}, {Q(0), Q(2)}, [](long k) {
    return std::tuple{Q(0), Q(2), Q(-2 * k)};
  }));
}

// L_n^alpha for any alpha in the coefficient field.
inline LaurentPoly laguerre(long n, const RatFun& alpha) {
  const RatFun one(1);
  return to_laurent(three_term<RatFun>(n, {one}, {one + alpha, RatFun(-1)}, [&](long k) {
    const RatFun inv = RatFun(mpq_class(1, k + 1));
    return std::tuple{(RatFun(2 * k + 1) + alpha) * inv, RatFun(-1) * inv,
                      -(RatFun(k) + alpha) * inv};
  }));
}

inline LaurentPoly legendre(long n) {
  using Q = mpq_class;
  return to_laurent(three_term<Q>(n, {Q(1)}, {Q(0), Q(1)}, [](long k) {
    return std::tuple{Q(0), Q(2 * k + 1, k + 1), Q(-k, k + 1)};
  }));
}

inline LaurentPoly gegenbauer(long n, const mpq_class& lam) {
  using Q = mpq_class;
  // (k+1) C_{k+1} = 2 (k + lam) x C_k - (k + 2 lam - 1) C_{k-1}
  return to_laurent(three_term<Q>(n, {Q(1)}, {Q(0), Q(2 * lam)}, [&](long k) {
    Q b = Q(2) * (k + lam) / (k + 1);
    Q c = -(k + Q(2) * lam - 1) / (k + 1);
    b.canonicalize();
    c.canonicalize();
    return std::tuple{Q(0), b, c};
  }));
}

inline LaurentPoly chebyshev1(long n) {
  using Q = mpq_class;
  return to_laurent(three_term<Q>(n, {Q(1)}, {Q(0), Q(1)}, [](long) {
    return std::tuple{Q(0), Q(2), Q(-1)};
  }));
}

inline LaurentPoly chebyshev2(long n) {
  using Q = mpq_class;
  return to_laurent(three_term<Q>(n, {Q(1)}, {Q(0), Q(2)}, [](long) {
    return std::tuple{Q(0), Q(2), Q(-1)};
  }));
}

// M(-n, g, x): (g + k) M_{k+1} = (2k + g - x) M_k - k M_{k-1}
inline LaurentPoly confluent(long n, const mpq_class& g) {
  using Q = mpq_class;
  Q m1 = Q(-1) / g;
  m1.canonicalize();
  return to_laurent(three_term<Q>(n, {Q(1)}, {Q(1), m1}, [&](long k) {
    Q inv = Q(1) / (g + k);
    inv.canonicalize();
    Q a = (2 * k + g) * inv, b = -inv, c = Q(-k) * inv;
    a.canonicalize();
    c.canonicalize();
    return std::tuple{a, b, c};
  }));
}

// 2F1(-n, b; c; x): (c + k) F_{k+1} = (2k + c - (b + k) x) F_k + k (x - 1) F_{k-1}
inline LaurentPoly hypergeometric(long n, const mpq_class& b, const mpq_class& c) {
  using Q = mpq_class;
  if (n == 0) return to_laurent(Dense<Q>{Q(1)});
  Q f1 = -b / c;
  f1.canonicalize();
  Dense<Q> p0{Q(1)}, p1{Q(1), f1};
  for (long k = 1; k < n; ++k) {
    Q inv = Q(1) / (c + k);
    inv.canonicalize();
    Dense<Q> next = add(scale(p1, Q((2 * k + c) * inv)), scale(shift_x(p1), Q(-(b + k) * inv)));
    next = add(next, scale(shift_x(p0), Q(k * inv)));
    next = add(next, scale(p0, Q(-k * inv)));
    for (auto& v : next) v.canonicalize();
    p0 = std::move(p1);
    p1 = std::move(next);
  }
  return to_laurent(p1);
}

// Ascending series of J_nu up to degree nu + 2 n.
inline LaurentPoly bessel(long nu, long n) {
  mpq_class c(1);
  for (long k = 1; k <= nu; ++k) c /= 2 * k;
  LaurentPoly out;
  for (long k = 0; k <= n; ++k) {
    out.add_term(nu + 2 * k, RatFun(c));
    c = -c / (4 * (k + 1) * (k + 1 + nu));
  }
  return out;
}

// Coefficients of the [D(D-1) + 2E x^2 - x^4] y = 0 series through the
// recurrence k (k - 1) c_k = c_{k-4} - 2 E c_{k-2}, c_0 = 1, odd terms zero.
inline std::map<long, RatFun> harmonic_series(const RatFun& e, long cutoff) {
  std::map<long, RatFun> c;
  c[0] = RatFun(1);
  for (long k = 2; k <= cutoff; k += 2) {
    RatFun v = RatFun(-2) * e * c[k - 2];
    if (k >= 4) v += c[k - 4];
    c[k] = v * RatFun(mpq_class(1, k * (k - 1)));
  }
  return c;
}

// Taylor coefficients of exp(-a x^2) up to x^cutoff.
inline std::map<long, mpq_class> gaussian(const mpq_class& a, long cutoff) {
  std::map<long, mpq_class> c;
  mpq_class t(1);
  for (long m = 0; 2 * m <= cutoff; ++m) {
    c[2 * m] = t;
    t = -t * a / (m + 1);
  }
  return c;
}

// Smallest eigenvalue of -d^2 + alpha x^2 + beta x^4 on a uniform grid,
// Dirichlet ends, by shifted inverse iteration with a tridiagonal solve.
inline double fd_ground(double alpha, double beta, double half_width = 10.0, int points = 2001) {
  const int n = points;
  const double h = 2 * half_width / (n + 1);
  std::vector<double> diag(n), v(n, 1.0);
  for (int i = 0; i < n; ++i) {
    const double x = -half_width + (i + 1) * h;
    diag[i] = 2 / (h * h) + alpha * x * x + beta * x * x * x * x;
  }
  const double off = -1 / (h * h);
  double lambda = 0;
  for (int it = 0; it < 500; ++it) {
    // Thomas algorithm for H w = v, H positive definite
    std::vector<double> c(n), d(n), w(n);
    c[0] = off / diag[0];
    d[0] = v[0] / diag[0];
    for (int i = 1; i < n; ++i) {
      const double m = diag[i] - off * c[i - 1];
      c[i] = off / m;
      d[i] = (v[i] - off * d[i - 1]) / m;
    }
    w[n - 1] = d[n - 1];
    for (int i = n - 2; i >= 0; --i) w[i] = d[i] - c[i] * w[i + 1];
    double norm = 0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
    // Rayleigh quotient
    double num = 0;
    for (int i = 0; i < n; ++i) {
      double hv = diag[i] * v[i];
      if (i > 0) hv += off * v[i - 1];
      if (i + 1 < n) hv += off * v[i + 1];
      num += v[i] * hv;
    }
    if (std::abs(num - lambda) < 1e-13 * std::abs(num)) return num;
    lambda = num;
  }
  return lambda;
}

// ---------------------------------------------------------------------------
// Many-body operators on expanded polynomials. Division by (z_i - z_j) is done
// by pairing each monomial with its transposed partner, not by long division.

using Exps = std::vector<long>;
using Poly = std::map<Exps, RatFun>;

inline void add_to(Poly& p, const Exps& e, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

inline Poly expand(const eulerop::manybody::SymPoly& s) {
  Poly out;
  for (const auto& [lam, c] : s.terms) {
    Exps e = lam.padded(s.n).parts;
    std::sort(e.begin(), e.end());
    do {
      add_to(out, e, c);
    } while (std::next_permutation(e.begin(), e.end()));
  }
  return out;
}

inline Poly scaled(const Poly& p, const RatFun& c) {
  Poly out;
  for (const auto& [e, v] : p) add_to(out, e, v * c);
  return out;
}

inline Poly sum(const Poly& a, const Poly& b) {
  Poly out = a;
  for (const auto& [e, v] : b) add_to(out, e, v);
  return out;
}

// g antisymmetric under z_i <-> z_j; returns g / (z_i - z_j).
inline Poly pair_quotient(const Poly& g, std::size_t i, std::size_t j, bool* exact) {
  Poly out;
  for (const auto& [e, c] : g) {
    if (e[i] == e[j]) {
      *exact = false;
      continue;
    }
    Exps partner = e;
    std::swap(partner[i], partner[j]);
    auto it = g.find(partner);
    if (e[i] < e[j]) {  // handled with its partner
      if (it == g.end()) *exact = false;
      continue;
    }
    if (it == g.end() || !(it->second == -c)) *exact = false;
    // z^e - z^{swap e} = z_i^lo z_j^lo (z_i^k - z_j^k) * rest
    const long lo = e[j], k = e[i] - e[j];
    for (long t = 0; t < k; ++t) {
      Exps m = e;
      m[i] = lo + t;
      m[j] = lo + k - 1 - t;
      add_to(out, m, c);
    }
  }
  return out;
}

// [sum D_i^2 + beta sum_{i<j} (z_i + z_j)/(z_i - z_j)(D_i - D_j) - eig] p
inline Poly sutherland_residual(const Poly& p, std::size_t n, const RatFun& beta,
                                const RatFun& eig, bool* exact) {
  Poly out;
  for (const auto& [e, c] : p) {
    long s = 0;
    for (long v : e) s += v * v;
    add_to(out, e, c * (RatFun(s) - eig));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly g;  // (z_i + z_j)(D_i - D_j) p
      for (const auto& [e, c] : p) {
        const RatFun w = c * RatFun(e[i] - e[j]);
        Exps a = e, b = e;
        ++a[i];
        ++b[j];
        add_to(g, a, w);
        add_to(g, b, w);
      }
      out = sum(out, scaled(pair_quotient(g, i, j, exact), beta));
    }
  }
  return out;
}

// [sum x_i d_i - n - (1/2) sum d_i^2 - beta sum_{i<j} (d_i - d_j)/(x_i - x_j)] p
inline Poly calogero_residual(const Poly& p, std::size_t n, const RatFun& beta, long level,
                              bool* exact) {
  Poly out;
  for (const auto& [e, c] : p) {
    long deg = 0;
    for (long v : e) deg += v;
    add_to(out, e, c * RatFun(deg - level));
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] < 2) continue;
      Exps m = e;
      m[i] -= 2;
      add_to(out, m, c * RatFun(mpq_class(-e[i] * (e[i] - 1), 2)));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly g;  // (d_i - d_j) p
      for (const auto& [e, c] : p) {
        if (e[i] > 0) {
          Exps m = e;
          --m[i];
          add_to(g, m, c * RatFun(e[i]));
        }
        if (e[j] > 0) {
          Exps m = e;
          --m[j];
          add_to(g, m, c * RatFun(-e[j]));
        }
      }
      out = sum(out, scaled(pair_quotient(g, i, j, exact), -beta));
    }
  }
  return out;
}

}  // namespace oracle
