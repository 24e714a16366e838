#pragma once

// Brute-force symmetric polynomials in finitely many variables. Nothing here
// calls into the LR, plethysm, or vertex code; only Partition and the SymFunc
// container are shared, so agreement with the main path is a real check.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "pvo/partition.hpp"
#include "pvo/symfunc.hpp"

namespace pvo::oracle {

using Exponent = std::vector<int>;

/// Polynomial in x_1..x_n with integer coefficients.
class MultiPoly {
 public:
  explicit MultiPoly(int n = 0) : n_(n) {}

  static MultiPoly constant(int n, const mpz_class& c);
  static MultiPoly monomial(const Exponent& e, const mpz_class& c = 1);

  int nvars() const noexcept { return n_; }
  const std::map<Exponent, mpz_class>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  mpz_class coeff(const Exponent& e) const;
  int degree() const;

  void add(const Exponent& e, const mpz_class& c);
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const mpz_class& k) const;
  /// Drops every term of total degree > d.
  MultiPoly truncated(int d) const;
  /// Product truncated to total degree <= d.
  MultiPoly times_truncated(const MultiPoly& o, int d) const;

  /// Invariant under every adjacent transposition x_i <-> x_{i+1}.
  bool is_symmetric() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  int n_;
  std::map<Exponent, mpz_class> terms_;
};

/// Sum over semistandard tableaux of shape lambda with entries in 1..n.
MultiPoly schur_poly(const Partition& lambda, int n);

/// Schur expansion of a symmetric polynomial in n variables, found by peeling
/// off the lexicographically largest monomial. Valid when deg p <= n.
/// Throws std::invalid_argument for non-symmetric input and std::logic_error
/// if a remainder survives.
SymFunc decompose(const MultiPoly& p, int n);

/// Kostka number K_{lambda,content}: SSYT of shape lambda with the given content.
long kostka(const Partition& lambda, const Exponent& content);

/// Symmetric polynomial stored by its coefficients on partition exponents
/// (the monomial-symmetric expansion) in n variables.
struct DominantPoly {
  int n = 0;
  std::map<Partition, mpz_class> coeffs;
};

DominantPoly dominant_schur(const Partition& lambda, int n);
DominantPoly dominant_product(const DominantPoly& a, const DominantPoly& b);
SymFunc decompose(const DominantPoly& p);

/// decompose(schur_poly(mu,n) * schur_poly(nu,n), n), computed on dominant
/// monomials only. n defaults to l(mu) + l(nu).
SymFunc oracle_product(const Partition& mu, const Partition& nu, int n = 0);

/// s_outer evaluated on the alphabet of monomials of s_inner(x_1..x_n),
/// decomposed. Requires n >= |outer| * |inner|; n = 0 picks that value.
SymFunc oracle_plethysm(const Partition& outer, const Partition& inner, int n = 0);

/// [s_lambda(Z)] M(XZ) L_pi(Z) with L_pi(Z) the literal tableau product
/// prod_T (1 - Z^T) over n Z-variables. Requires n >= |lambda|.
SymFunc oracle_pi_schur(const Partition& pi, const Partition& lambda, int n = 0);

/// [s_lambda(Z)] L(XZ) L_{pi'}(Z) (|pi| even) or L(XZ) M_{pi'}(Z) (|pi| odd).
SymFunc oracle_dual_pi_schur(const Partition& pi, const Partition& lambda, int n = 0);

}  // namespace pvo::oracle
