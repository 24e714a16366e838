#pragma once

#include <gmpxx.h>

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pvo/partition.hpp"

namespace pvo {

using Rational = mpq_class;
using Integer = mpz_class;

/// Sparse linear combination over partitions with exact rational
/// coefficients. Zero coefficients are never stored. The same container
/// backs the Schur basis (SymFunc) and the power-sum basis (PowerExpr);
/// the tag keeps the two from mixing.
template <class Tag>
class SparseCombination {
 public:
  using Terms = std::map<Partition, Rational, RevLex>;

  SparseCombination() = default;
  explicit SparseCombination(const Partition& p, Rational c = 1) { add(p, c); }

  static SparseCombination one() { return SparseCombination(Partition{}); }
  static SparseCombination constant(const Rational& c) {
    return SparseCombination(Partition{}, c);
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Rational coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Partition& p, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Largest weight present; -1 for the zero element.
  int max_degree() const noexcept {
    int d = -1;
    for (const auto& [p, c] : terms_) d = std::max(d, p.weight());
    return d;
  }
  int min_degree() const noexcept {
    int d = -1;
    for (const auto& [p, c] : terms_)
      if (d < 0 || p.weight() < d) d = p.weight();
    return d;
  }

  SparseCombination degree_part(int d) const {
    SparseCombination out;
    for (const auto& [p, c] : terms_)
      if (p.weight() == d) out.terms_.emplace(p, c);
    return out;
  }

  SparseCombination& operator+=(const SparseCombination& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
  }
  SparseCombination& operator-=(const SparseCombination& o) {
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
  }
  SparseCombination& operator*=(const Rational& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [p, c] : terms_) c *= k;
    return *this;
  }

  friend SparseCombination operator+(SparseCombination a, const SparseCombination& b) {
    return a += b;
  }
  friend SparseCombination operator-(SparseCombination a, const SparseCombination& b) {
    return a -= b;
  }
  friend SparseCombination operator-(SparseCombination a) { return a *= Rational(-1); }
  friend SparseCombination operator*(SparseCombination a, const Rational& k) {
    return a *= k;
  }
  friend SparseCombination operator*(const Rational& k, SparseCombination a) {
    return a *= k;
  }
  friend bool operator==(const SparseCombination& a, const SparseCombination& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

struct SchurTag {};
struct PowerTag {};

/// Element of the ring of symmetric functions in the Schur basis.
using SymFunc = SparseCombination<SchurTag>;
/// Element in the power-sum basis p_lambda = p_{l1} p_{l2} ...
using PowerExpr = SparseCombination<PowerTag>;

inline SymFunc schur(const Partition& p) { return SymFunc(p); }
inline SymFunc h(int n) { return SymFunc(Partition::row(n)); }
inline SymFunc e(int n) { return SymFunc(Partition::column(n)); }

/// Text form "s[2] - 1/2*s[1,1]"; zero prints as "0".
std::string to_string(const SymFunc& f);
std::string to_string(const PowerExpr& f);
std::ostream& operator<<(std::ostream& os, const SymFunc& f);
std::ostream& operator<<(std::ostream& os, const PowerExpr& f);

// ---------------------------------------------------------------------------
// Littlewood-Richardson machinery

/// c^lambda_{mu nu} for all nu: the skew s_{lambda/mu} in the Schur basis,
/// counted by LR tableaux of shape lambda/mu.
const std::map<Partition, long, RevLex>& lr_skew(const Partition& lambda,
                                                  const Partition& mu);

/// c^lambda_{mu nu}.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Generalised coefficient of s_pi in s_(i1) s_(i2) ... (rows) or in
/// s_(1^i1) s_(1^i2) ... (column_mode).
long multi_lr(const Partition& pi, std::span<const int> sizes, bool column_mode);

// ---------------------------------------------------------------------------
// Ring operations

SymFunc product(const SymFunc& f, const SymFunc& g);
SymFunc operator*(const SymFunc& f, const SymFunc& g);

/// g^perp f: adjoint of multiplication by g.
SymFunc skew(const SymFunc& f, const SymFunc& g);
inline SymFunc perp(const SymFunc& g, const SymFunc& f) { return skew(f, g); }

/// Repeated skew (s_{k1} s_{k2} ...)^perp s_pi.
SymFunc skew_by_sequence(const Partition& pi, std::span<const Partition> removed);

Rational inner(const SymFunc& f, const SymFunc& g);
Rational inner(const PowerExpr& f, const PowerExpr& g);

/// s[lambda] -> s[lambda'].
SymFunc omega(const SymFunc& f);

PowerExpr product(const PowerExpr& f, const PowerExpr& g);
PowerExpr operator*(const PowerExpr& f, const PowerExpr& g);

/// Character chi^lambda(rho) via Murnaghan-Nakayama rim-hook removal.
long long character(const Partition& lambda, const Partition& rho);

PowerExpr to_power_basis(const SymFunc& f);
SymFunc from_power_basis(const PowerExpr& q);

}  // namespace pvo
