#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pvo/plethysm.hpp"

namespace pvo {

enum class Action { Multiply, Skew };

/// One primitive operator: multiplication by, or skew by, a plethystic series
/// whose formal argument is the monomial prod_x x^{exps[x]}.
struct Factor {
  Action action = Action::Multiply;
  SeriesSpec spec;
  std::vector<int> exps;

  friend bool operator==(const Factor&, const Factor&) = default;
};

enum class ZeroModeKind { Raise, Lower, AlphaPow };

/// e^{iq}, e^{-iq}, or x^{sign * alpha_0} for variable index `var`.
struct ZeroMode {
  ZeroModeKind kind = ZeroModeKind::Raise;
  int var = 0;
  int sign = 1;

  static ZeroMode raise() { return {ZeroModeKind::Raise, 0, 1}; }
  static ZeroMode lower() { return {ZeroModeKind::Lower, 0, -1}; }
  static ZeroMode alpha(int var, int sign) { return {ZeroModeKind::AlphaPow, var, sign}; }

  friend bool operator==(const ZeroMode&, const ZeroMode&) = default;
};

/// Ordered operator product, written left to right in the usual way and applied
/// right to left. The zero-mode suffix stands to the right of every factor.
struct FactorChain {
  std::vector<std::string> vars;
  std::vector<Factor> factors;
  std::vector<ZeroMode> zero_modes;

  int var_index(const std::string& name) const;
  std::string to_string() const;

  friend bool operator==(const FactorChain&, const FactorChain&) = default;
};

/// Re-express `chain` over `vars` (a superset of its own variables).
FactorChain rebase(const FactorChain& chain, const std::vector<std::string>& vars);

/// Operator product a * b (b acts first). Variables are merged by name in
/// order of first appearance; zero-mode suffixes are concatenated.
FactorChain compose(const FactorChain& a, const FactorChain& b);

/// Charge-graded Fock state: charge -> symmetric function.
struct ChargedState {
  std::map<int, SymFunc> sectors;

  static ChargedState pure(int charge, SymFunc f);
  void add(int charge, const SymFunc& f);
  bool is_zero() const { return sectors.empty(); }
  ChargedState& operator+=(const ChargedState& o);
  ChargedState& operator-=(const ChargedState& o);
  ChargedState& operator*=(const Rational& k);
  std::string to_string() const;

  friend bool operator==(const ChargedState&, const ChargedState&) = default;
};

/// Finitely supported Laurent polynomial over named variables.
template <class V>
struct Laurent {
  std::vector<std::string> vars;
  std::map<std::vector<int>, V> coeffs;

  friend bool operator==(const Laurent&, const Laurent&) = default;
};
using LaurentMap = Laurent<SymFunc>;
using ChargedLaurent = Laurent<ChargedState>;

/// Inclusive exponent box, one [lo, hi] per chain variable.
using Window = std::vector<std::pair<int, int>>;

struct ApplyLimits {
  /// Largest grade any single factor may reach before evaluation gives up.
  long max_grade = 4096;
  /// Cap on the number of live (exponent, function) pairs.
  long max_points = 2'000'000;
};

/// Applies the factors of `chain` (not its zero modes) to f and returns every
/// coefficient inside the window. Every reported coefficient is exact.
/// Throws BudgetExceeded if some factor grade cannot be bounded.
LaurentMap apply_factors(const FactorChain& chain, const SymFunc& f, const Window& window,
                         const ApplyLimits& limits = {});

/// Full application including the zero-mode suffix, sector by sector.
ChargedLaurent apply_chain(const FactorChain& chain, const ChargedState& state,
                           const Window& window, const ApplyLimits& limits = {});

// ---------------------------------------------------------------------------
// Zero modes

/// x^{alpha[x] * alpha_0} preceded by the scalar prod_x x^{constant[x]} and
/// followed by e^{i shift q}.
struct ZeroModeNormalForm {
  std::vector<int> constant;
  std::vector<int> alpha;
  int shift = 0;

  /// Action on |c>: (new charge, monomial exponents).
  std::pair<int, std::vector<int>> act(int charge) const;

  friend bool operator==(const ZeroModeNormalForm&, const ZeroModeNormalForm&) = default;
};

ZeroModeNormalForm zero_mode_normal_form(const std::vector<ZeroMode>& suffix, int nvars);

/// Direct right-to-left action of the suffix on |c>.
std::pair<int, std::vector<int>> act_zero_modes(const std::vector<ZeroMode>& suffix, int nvars,
                                                int charge);

// ---------------------------------------------------------------------------
// Vertex operators

/// M(z) L^perp(1/z) prod_{k>0} L^perp_{pi/(k)}(z^k).
FactorChain build_vertex(const Partition& pi, const std::string& var = "z");
/// L(z) M^perp(1/z) prod_{k>=0} M^perp_{pi/(1^{2k+1})}(z^{2k+1}) prod_{k>0} L^perp_{pi/(1^{2k})}(z^{2k}).
FactorChain build_dual_vertex(const Partition& pi, const std::string& var = "z");

enum class ModeKind { X, Xstar };

/// How the charge enters mode extraction. ChargeTwisted takes the plain
/// Laurent coefficients of X(z) = V(z) e^{iq} z^{alpha_0} and of
/// X*(z) = V*(z) z^{-alpha_0} e^{-iq}. ChargeFree ignores the zero modes'
/// z-dependence and reads [z^{-m}] of V alone; it breaks {X_m, X_n} = 0 and is
/// kept to show that the Clifford checks can tell the two apart.
enum class ModeConvention { ChargeTwisted, ChargeFree };

/// The full operator chain X^pi(z) or X*^pi(z) over the variable `var`.
FactorChain full_vertex(const Partition& pi, ModeKind kind, const std::string& var = "z");

/// X_m |c,f> = |c+1, [z^{-m-c}] V f>,  X*_n |c,f> = |c-1, [z^{c-1-n}] V* f>
/// under the default convention.
ChargedState mode(const Partition& pi, ModeKind kind, int m, const ChargedState& state,
                  ModeConvention convention = ModeConvention::ChargeTwisted);

/// A(m) B(n) + B(n) A(m) on the state. Both operators must share pi.
ChargedState anticommutator(const Partition& pi_a, ModeKind kind_a, int m,
                            const Partition& pi_b, ModeKind kind_b, int n,
                            const ChargedState& state,
                            ModeConvention convention = ModeConvention::ChargeTwisted);

inline constexpr int kDefaultMaxStringLength = 4;

/// [z_1^{l_1} ... z_m^{l_m}] V(z_1) ... V(z_m) . 1 (or the dual string).
SymFunc vertex_string(const Partition& pi, const Partition& lambda, bool dual,
                      int max_length = kDefaultMaxStringLength);

enum class VertexKind { V, Vstar };

/// Right-hand normal-ordered form of a product of vertex operators, scalar
/// prefactors included as factors of the chain.
struct NormalOrdered {
  FactorChain chain;
  std::string prefactor;
};

/// Homogeneous strings of any length, or one mixed pair. Throws
/// std::invalid_argument for longer mixed strings.
NormalOrdered normal_order_product(const Partition& pi, const std::vector<VertexKind>& kinds,
                                   const std::vector<std::string>& vars);

/// The left-hand side: the plain operator product of the individual chains.
FactorChain vertex_product(const Partition& pi, const std::vector<VertexKind>& kinds,
                           const std::vector<std::string>& vars);

/// R_pi(z,z) in its hook form: M(z) L(z) L^perp(1/z) M^perp(1/z) times the
/// paired hook factors M^perp_{pi/h}(z^|h|) L^perp_{pi/h}(z^|h|).
FactorChain diagonal_r_chain(const Partition& pi, const std::string& var = "z");

// Convenience constructors.
Factor multiply_by(Family f, Partition base, std::vector<Partition> removed, std::vector<int> exps);
Factor skew_by(Family f, Partition base, std::vector<Partition> removed, std::vector<int> exps);

std::string to_string(const Factor& f, const std::vector<std::string>& vars);

}  // namespace pvo
