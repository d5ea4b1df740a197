#pragma once

#include <map>
#include <string>
#include <vector>

#include "eulerop/ratfun.hpp"

namespace eulerop::manybody {

/// Weakly decreasing parts, padded with zeros to the particle count.
struct Partition {
  std::vector<long> parts;

  Partition() = default;
  explicit Partition(std::vector<long> p);  // sorts descending
  // Pads to n parts; throws TooManyParts if more than n parts are nonzero.
  Partition padded(std::size_t n) const;
  long weight() const;
  long sum_of_squares() const;
  std::size_t length() const;  // nonzero parts
  std::string str() const;     // "2,0"
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Partitions of `weight` into at most n parts, each padded to n, in
/// reverse lexicographic order (dominance-compatible, largest first).
std::vector<Partition> partitions(long weight, std::size_t n);

/// a >= b in dominance order (equal weights, same padding).
bool dominates(const Partition& a, const Partition& b);

/// Polynomial in z_1..z_N with RatFun coefficients.
class ZPoly {
 public:
  using Exponents = std::vector<long>;
  using Terms = std::map<Exponents, RatFun>;

  explicit ZPoly(std::size_t n = 0) : n_(n) {}
  static ZPoly constant(std::size_t n, const RatFun& c);

  std::size_t vars() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  RatFun coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const RatFun& c);

  bool is_symmetric() const;

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  ZPoly& operator*=(const RatFun& c);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(ZPoly a, const RatFun& c) { return a *= c; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly& a, const ZPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_;
  Terms terms_;
};

/// Symmetric polynomial in the monomial-symmetric basis.
struct SymPoly {
  std::size_t n = 0;
  std::map<Partition, RatFun> terms;

  RatFun coeff(const Partition& p) const;
  void add_term(const Partition& p, const RatFun& c);
  bool is_zero() const { return terms.empty(); }
  ZPoly expand() const;
  // Throws InvalidArgument if p is not symmetric.
  static SymPoly from_expanded(const ZPoly& p);
  SymPoly evaluated(const std::map<Symbol, Rational>& bindings) const;
  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.n == b.n && a.terms == b.terms;
  }
};

std::string to_string(const SymPoly& p);
std::string to_string(const ZPoly& p, const std::string& var = "z");

/// m_lam in N variables. Throws TooManyParts.
SymPoly msf(const Partition& lam, std::size_t n);
ZPoly msf_expand(const Partition& lam, std::size_t n);

// ---------------------------------------------------------------------------
// Differential building blocks on expanded polynomials

/// p / (z_i - z_j); throws DivisionRemainder when the division is not exact.
ZPoly divide_difference(const ZPoly& p, std::size_t i, std::size_t j);
/// sum_i D_i^2 p, D_i = z_i d/dz_i
ZPoly euler_square_sum(const ZPoly& p);
/// sum_{i<j} (z_i + z_j)/(z_i - z_j) (D_i - D_j) p
ZPoly sutherland_offdiag(const ZPoly& p);
/// sum_i x_i d/dx_i p
ZPoly euler_sum(const ZPoly& p);
/// (1/2) sum_i d_i^2 p + beta sum_{i<j} (d_i - d_j)/(x_i - x_j) p
ZPoly calogero_a(const ZPoly& p, const RatFun& beta);

// ---------------------------------------------------------------------------
// Sutherland / Jack

/// E_lam - E_0 = sum_i (lam_i^2 + beta (N + 1 - 2i) lam_i).
RatFun sutherland_eigenvalue(const Partition& lam, const RatFun& beta, std::size_t n);

/// Z p = beta sum_{i<j} (z_i + z_j)/(z_i - z_j)(D_i - D_j) p
///       + (sum lam_i^2 - (E_lam - E_0)) p
SymPoly sutherland_apply(const SymPoly& p, const Partition& lam, const RatFun& beta, std::size_t n);

/// [sum D_i^2 + beta sum (z_i+z_j)/(z_i-z_j)(D_i-D_j) - (E_lam - E_0)] p
SymPoly sutherland_residual(const SymPoly& p, const Partition& lam, const RatFun& beta,
                            std::size_t n);

/// Symmetric eigenfunction m_lam + sum_{mu < lam} c_mu m_mu, m_lam coefficient 1.
/// The inverse (1 + S)^{-1} is resummed exactly on the dominance-ordered
/// basis. Throws DegenerateDenominator when E_mu = E_lam for a reachable mu.
SymPoly jack(const Partition& lam, const RatFun& beta, std::size_t n);

/// Every term is dominated by lam and the lam coefficient is 1.
bool dominance_triangular(const SymPoly& p, const Partition& lam);

// ---------------------------------------------------------------------------
// Calogero

/// P = exp(-A/2) m_lam; A lowers the degree by two, so the sum is finite.
SymPoly calogero_polynomial(const Partition& lam, const RatFun& beta, std::size_t n);

struct CalogeroReport {
  SymPoly polynomial;
  ZPoly residual;  // [sum x_i d_i - |lam| - A] P
  RatFun e0;       // N/2 + beta N (N - 1)/2
  RatFun energy;   // e0 + |lam|
  bool ok = false;
};

CalogeroReport calogero_verify(const Partition& lam, const RatFun& beta, std::size_t n);

}  // namespace eulerop::manybody
