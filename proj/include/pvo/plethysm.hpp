#pragma once

#include <map>
#include <string>
#include <vector>

#include "pvo/errors.hpp"
#include "pvo/symfunc.hpp"

namespace pvo {

inline constexpr int kDefaultDegreeBudget = 14;

/// outer[inner] via p_n[g] = g(p_m -> p_{mn}), with p_n[c] = c for scalars.
/// Throws BudgetExceeded when deg(outer) * deg(inner) > degree_budget.
SymFunc plethysm(const SymFunc& outer, const SymFunc& inner,
                 int degree_budget = kDefaultDegreeBudget);

enum class Family { M, L };

std::string to_string(Family f);

/// Shape of a plethystic series M_sigma / L_sigma. The inner function is
/// (s_{k1} s_{k2} ...)^perp s_base; a plain shape has no removed parts and a
/// skew shape pi/kappa has one.
struct SeriesSpec {
  Family family = Family::M;
  Partition base;
  std::vector<Partition> removed;

  SeriesSpec() = default;
  SeriesSpec(Family f, Partition b, std::vector<Partition> r = {});

  /// The symmetric function whose plethysms make up the series terms.
  SymFunc inner() const;
  /// Degree of inner(); -1 when inner() vanishes.
  int inner_degree() const;
  std::string to_string() const;

  friend bool operator==(const SeriesSpec&, const SeriesSpec&) = default;
  friend auto operator<=>(const SeriesSpec& a, const SeriesSpec& b) {
    if (auto c = a.family <=> b.family; c != 0) return c;
    if (auto c = a.base <=> b.base; c != 0) return c;
    return a.removed <=> b.removed;
  }
};

/// M: s_(r)[inner];  L: (-1)^r s_(1^r)[inner].
SymFunc series_term(const SeriesSpec& spec, int r,
                    int degree_budget = kDefaultDegreeBudget);

/// Largest r with a possibly nonzero term, ignoring any operand: 0 when the
/// inner function vanishes, c for L over a scalar c in {0,1,2,...}, and -1
/// (unbounded) otherwise.
int series_intrinsic_cap(const SeriesSpec& spec);

/// Largest r whose term can survive skewing a function of degree
/// `operand_degree`; -1 means unbounded (scalar M series).
int series_skew_cap(const SeriesSpec& spec, int operand_degree);

/// grade r -> series_term(spec, r)^perp f, nonzero grades only.
std::map<int, SymFunc> series_perp_apply(const SeriesSpec& spec, const SymFunc& f,
                                         int degree_budget = kDefaultDegreeBudget);

/// Sum of all grades of series_perp_apply (the z = 1 specialisation).
SymFunc series_perp_at_one(const SeriesSpec& spec, const SymFunc& f,
                           int degree_budget = kDefaultDegreeBudget);

/// L_pi^perp(1) s_lambda.
SymFunc pi_schur(const Partition& pi, const Partition& lambda);
/// M_pi^perp(1) s_lambda.
SymFunc pi_branch(const Partition& pi, const Partition& lambda);
/// (-1)^{|lambda|} L_pi^perp(1) s_{lambda'}.
SymFunc dual_pi_schur(const Partition& pi, const Partition& lambda);

/// [s_lambda(Z)] M(XZ) L_pi(Z), computed through the two-alphabet product.
SymFunc cauchy_pi_schur(const Partition& pi, const Partition& lambda);
/// [s_lambda(Z)] L(XZ) L_{pi'}(Z) for |pi| even, L(XZ) M_{pi'}(Z) for |pi| odd.
SymFunc cauchy_dual_pi_schur(const Partition& pi, const Partition& lambda);

/// Coefficient of s_nu in L_pi(1) = sum_k (-1)^k s_(1^k)[s_pi].
Rational l_coefficient(const Partition& pi, const Partition& nu);
/// Coefficient of s_nu in M_pi(1) = sum_k s_(k)[s_pi].
Rational m_coefficient(const Partition& pi, const Partition& nu);

}  // namespace pvo
