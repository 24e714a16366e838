#include "pvo/vertex.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "pvo/memo.hpp"

namespace pvo {

namespace {

constexpr long kUnbounded = -1;

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string monomial(const std::vector<int>& exps, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += " ";
    out += vars[i];
    if (exps[i] != 1) out += "^" + std::to_string(exps[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<int> unit_exps(std::size_t nvars, std::size_t var, int power) {
  std::vector<int> e(nvars, 0);
  e[var] = power;
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// Chains and states

Factor multiply_by(Family f, Partition base, std::vector<Partition> removed,
                   std::vector<int> exps) {
  return {Action::Multiply, SeriesSpec(f, std::move(base), std::move(removed)), std::move(exps)};
}

Factor skew_by(Family f, Partition base, std::vector<Partition> removed, std::vector<int> exps) {
  return {Action::Skew, SeriesSpec(f, std::move(base), std::move(removed)), std::move(exps)};
}

std::string to_string(const Factor& f, const std::vector<std::string>& vars) {
  std::string s = pvo::to_string(f.spec.family);
  if (f.action == Action::Skew) s += "^perp";
  const bool plain = f.spec.base == Partition{1} && f.spec.removed.empty();
  if (!plain) {
    s += "_" + f.spec.base.to_string();
    for (const auto& k : f.spec.removed) s += "/" + k.to_string();
  }
  return s + "(" + monomial(f.exps, vars) + ")";
}

int FactorChain::var_index(const std::string& name) const {
  auto it = std::find(vars.begin(), vars.end(), name);
  if (it == vars.end()) throw std::invalid_argument("unknown variable '" + name + "'");
  return static_cast<int>(it - vars.begin());
}

std::string FactorChain::to_string() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += " ";
    s += pvo::to_string(f, vars);
  }
  for (const auto& z : zero_modes) {
    if (!s.empty()) s += " ";
    switch (z.kind) {
      case ZeroModeKind::Raise: s += "e^{iq}"; break;
      case ZeroModeKind::Lower: s += "e^{-iq}"; break;
      case ZeroModeKind::AlphaPow:
        s += vars[static_cast<std::size_t>(z.var)] + (z.sign > 0 ? "^{a0}" : "^{-a0}");
        break;
    }
  }
  return s.empty() ? "1" : s;
}

FactorChain rebase(const FactorChain& chain, const std::vector<std::string>& vars) {
  FactorChain out;
  out.vars = vars;
  std::vector<int> where;
  for (const auto& v : chain.vars) {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw std::invalid_argument("rebase: variable '" + v + "' missing");
    where.push_back(static_cast<int>(it - vars.begin()));
  }
  for (const auto& f : chain.factors) {
    Factor g = f;
    g.exps.assign(vars.size(), 0);
    for (std::size_t i = 0; i < f.exps.size(); ++i)
      g.exps[static_cast<std::size_t>(where[i])] += f.exps[i];
    out.factors.push_back(std::move(g));
  }
  for (auto z : chain.zero_modes) {
    if (z.kind == ZeroModeKind::AlphaPow) z.var = where[static_cast<std::size_t>(z.var)];
    out.zero_modes.push_back(z);
  }
  return out;
}

FactorChain compose(const FactorChain& a, const FactorChain& b) {
  std::vector<std::string> vars = a.vars;
  for (const auto& v : b.vars)
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  FactorChain ra = rebase(a, vars), rb = rebase(b, vars);
  if (!ra.zero_modes.empty() && !rb.factors.empty())
    throw std::invalid_argument(
        "compose: zero modes must stay rightmost; compose full operators through apply_chain");
  FactorChain out;
  out.vars = vars;
  out.factors = ra.factors;
  out.factors.insert(out.factors.end(), rb.factors.begin(), rb.factors.end());
  out.zero_modes = ra.zero_modes;
  out.zero_modes.insert(out.zero_modes.end(), rb.zero_modes.begin(), rb.zero_modes.end());
  return out;
}

ChargedState ChargedState::pure(int charge, SymFunc f) {
  ChargedState s;
  s.add(charge, f);
  return s;
}

void ChargedState::add(int charge, const SymFunc& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = sectors.try_emplace(charge, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) sectors.erase(it);
  }
}

ChargedState& ChargedState::operator+=(const ChargedState& o) {
  for (const auto& [c, f] : o.sectors) add(c, f);
  return *this;
}

ChargedState& ChargedState::operator-=(const ChargedState& o) {
  for (const auto& [c, f] : o.sectors) add(c, -f);
  return *this;
}

ChargedState& ChargedState::operator*=(const Rational& k) {
  if (k == 0) sectors.clear();
  for (auto& [c, f] : sectors) f *= k;
  return *this;
}

std::string ChargedState::to_string() const {
  if (sectors.empty()) return "0";
  std::string s;
  for (const auto& [c, f] : sectors) {
    if (!s.empty()) s += " + ";
    s += "|" + std::to_string(c) + ", " + pvo::to_string(f) + ">";
  }
  return s;
}

// ---------------------------------------------------------------------------
// Window evaluation

namespace {

struct GradePlan {
  std::vector<long> caps;
  std::vector<int> degrees;  // inner degree per factor, -1 when the series is 1
};

GradePlan plan_grades(const FactorChain& chain, int input_degree, const Window& window,
                      const ApplyLimits& limits) {
  const std::size_t n = chain.factors.size();
  const std::size_t nv = chain.vars.size();
  GradePlan plan{std::vector<long>(n, kUnbounded), std::vector<int>(n, 0)};
  auto& cap = plan.caps;

  auto tighten = [&](std::size_t i, long bound) {
    bound = std::max(bound, 0L);
    if (cap[i] == kUnbounded || bound < cap[i]) {
      cap[i] = bound;
      return true;
    }
    return false;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const auto& f = chain.factors[i];
    plan.degrees[i] = f.spec.inner_degree();
    if (plan.degrees[i] < 0) cap[i] = 0;
    const int intrinsic = series_intrinsic_cap(f.spec);
    if (intrinsic >= 0) tighten(i, intrinsic);
  }

  for (bool changed = true; changed;) {
    changed = false;
    // Degree: skews can only remove what earlier factors (and the input) put in.
    long degree = std::max(input_degree, 0);
    bool finite = true;
    for (std::size_t i = n; i-- > 0;) {
      const auto& f = chain.factors[i];
      const int d = plan.degrees[i];
      if (d <= 0) continue;
      if (f.action == Action::Skew) {
        if (finite) changed |= tighten(i, degree / d);
      } else if (cap[i] == kUnbounded) {
        finite = false;
      } else {
        degree += cap[i] * d;
      }
    }
    // Exponents: every factor moving variable x is boxed in by the window
    // once the others moving x are bounded.
    for (std::size_t x = 0; x < nv; ++x) {
      for (std::size_t g = 0; g < n; ++g) {
        const long e = chain.factors[g].exps[x];
        if (e == 0 || cap[g] == 0) continue;
        long others = 0;
        bool ok = true;
        for (std::size_t f = 0; f < n && ok; ++f) {
          if (f == g) continue;
          const long ef = chain.factors[f].exps[x];
          if ((e > 0 && ef < 0) || (e < 0 && ef > 0)) {
            if (cap[f] == kUnbounded) ok = false;
            else others += cap[f] * ef;
          }
        }
        if (!ok) continue;
        if (e > 0) changed |= tighten(g, floor_div(window[x].second - others, e));
        else changed |= tighten(g, floor_div(others - window[x].first, -e));
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (cap[i] == kUnbounded)
      throw BudgetExceeded("factor " + to_string(chain.factors[i], chain.vars) +
                           " has no grade bound inside the window");
    if (cap[i] > limits.max_grade)
      throw BudgetExceeded("factor " + to_string(chain.factors[i], chain.vars) + " needs grade " +
                           std::to_string(cap[i]) + " > limit " + std::to_string(limits.max_grade));
  }
  return plan;
}

}  // namespace

LaurentMap apply_factors(const FactorChain& chain, const SymFunc& f, const Window& window,
                         const ApplyLimits& limits) {
  const std::size_t n = chain.factors.size();
  const std::size_t nv = chain.vars.size();
  if (window.size() != nv)
    throw std::invalid_argument("apply_factors: window has " + std::to_string(window.size()) +
                                " intervals for " + std::to_string(nv) + " variables");
  for (const auto& f2 : chain.factors)
    if (f2.exps.size() != nv) throw std::invalid_argument("apply_factors: malformed factor");

  LaurentMap out;
  out.vars = chain.vars;
  for (const auto& [lo, hi] : window)
    if (lo > hi) return out;
  if (f.is_zero()) return out;

  const GradePlan plan = plan_grades(chain, f.max_degree(), window, limits);

  // rest_lo[i][x], rest_hi[i][x]: reach of the factors left of i (applied later).
  std::vector<std::vector<long>> rest_lo(n + 1, std::vector<long>(nv, 0));
  std::vector<std::vector<long>> rest_hi(n + 1, std::vector<long>(nv, 0));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t x = 0; x < nv; ++x) {
      const long c = plan.caps[i - 1] * chain.factors[i - 1].exps[x];
      rest_lo[i][x] = rest_lo[i - 1][x] + std::min(0L, c);
      rest_hi[i][x] = rest_hi[i - 1][x] + std::max(0L, c);
    }
  auto reachable = [&](const std::vector<int>& v, std::size_t i) {
    for (std::size_t x = 0; x < nv; ++x) {
      if (v[x] + rest_lo[i][x] > window[x].second) return false;
      if (v[x] + rest_hi[i][x] < window[x].first) return false;
    }
    return true;
  };

  std::map<std::vector<int>, SymFunc> cur;
  {
    std::vector<int> zero(nv, 0);
    if (reachable(zero, n)) cur.emplace(zero, f);
  }

  for (std::size_t i = n; i-- > 0 && !cur.empty();) {
    const Factor& fac = chain.factors[i];
    const int d = plan.degrees[i];
    const long cap = plan.caps[i];
    if (d < 0 || cap == 0) {
      // Series is 1 (or only its constant term can reach the window).
      std::map<std::vector<int>, SymFunc> next;
      for (auto& [v, g] : cur)
        if (reachable(v, i)) next.emplace(v, std::move(g));
      cur = std::move(next);
      continue;
    }
    std::map<std::vector<int>, SymFunc> next;
    for (const auto& [v, g] : cur) {
      long top = cap;
      if (fac.action == Action::Skew && d > 0) top = std::min<long>(top, g.max_degree() / d);
      for (long r = 0; r <= top; ++r) {
        std::vector<int> w = v;
        for (std::size_t x = 0; x < nv; ++x) w[x] += static_cast<int>(r * fac.exps[x]);
        if (!reachable(w, i)) continue;
        const int budget = std::max<int>(kDefaultDegreeBudget, static_cast<int>(r) * std::max(d, 0));
        const SymFunc term = series_term(fac.spec, static_cast<int>(r), budget);
        if (term.is_zero()) continue;
        SymFunc h = fac.action == Action::Skew ? skew(g, term) : product(term, g);
        if (h.is_zero()) continue;
        auto [it, inserted] = next.try_emplace(std::move(w), h);
        if (!inserted) {
          it->second += h;
        }
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    if (static_cast<long>(next.size()) > limits.max_points)
      throw BudgetExceeded("apply_factors: more than " + std::to_string(limits.max_points) +
                           " intermediate coefficients");
    cur = std::move(next);
  }

  for (auto& [v, g] : cur) {
    bool inside = true;
    for (std::size_t x = 0; x < nv; ++x)
      inside = inside && v[x] >= window[x].first && v[x] <= window[x].second;
    if (inside) out.coeffs.emplace(v, std::move(g));
  }
  return out;
}

ChargedLaurent apply_chain(const FactorChain& chain, const ChargedState& state,
                           const Window& window, const ApplyLimits& limits) {
  ChargedLaurent out;
  out.vars = chain.vars;
  const int nv = static_cast<int>(chain.vars.size());
  for (const auto& [c, f] : state.sectors) {
    auto [charge, offset] = act_zero_modes(chain.zero_modes, nv, c);
    Window shifted = window;
    for (int x = 0; x < nv; ++x) {
      shifted[static_cast<std::size_t>(x)].first -= offset[static_cast<std::size_t>(x)];
      shifted[static_cast<std::size_t>(x)].second -= offset[static_cast<std::size_t>(x)];
    }
    for (auto& [v, g] : apply_factors(chain, f, shifted, limits).coeffs) {
      std::vector<int> w = v;
      for (int x = 0; x < nv; ++x) w[static_cast<std::size_t>(x)] += offset[static_cast<std::size_t>(x)];
      out.coeffs[w].add(charge, g);
    }
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// ---------------------------------------------------------------------------
// Zero modes

std::pair<int, std::vector<int>> ZeroModeNormalForm::act(int charge) const {
  const int c = charge + shift;
  std::vector<int> e(constant.size());
  for (std::size_t x = 0; x < e.size(); ++x) e[x] = constant[x] + alpha[x] * c;
  return {c, e};
}

ZeroModeNormalForm zero_mode_normal_form(const std::vector<ZeroMode>& suffix, int nvars) {
  ZeroModeNormalForm nf{std::vector<int>(static_cast<std::size_t>(nvars), 0),
                        std::vector<int>(static_cast<std::size_t>(nvars), 0), 0};
  for (const auto& z : suffix)
    if (z.kind != ZeroModeKind::AlphaPow) nf.shift += z.sign;
  // Moving x^{s alpha_0} right past the shifts it sees leaves x^{s (S_right - S_total)}.
  int right = 0;
  for (auto it = suffix.rbegin(); it != suffix.rend(); ++it) {
    if (it->kind == ZeroModeKind::AlphaPow) {
      const auto x = static_cast<std::size_t>(it->var);
      nf.alpha[x] += it->sign;
      nf.constant[x] += it->sign * (right - nf.shift);
    } else {
      right += it->sign;
    }
  }
  return nf;
}

std::pair<int, std::vector<int>> act_zero_modes(const std::vector<ZeroMode>& suffix, int nvars,
                                                int charge) {
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  for (auto it = suffix.rbegin(); it != suffix.rend(); ++it) {
    switch (it->kind) {
      case ZeroModeKind::Raise: ++charge; break;
      case ZeroModeKind::Lower: --charge; break;
      case ZeroModeKind::AlphaPow: e[static_cast<std::size_t>(it->var)] += it->sign * charge; break;
    }
  }
  return {charge, e};
}

// ---------------------------------------------------------------------------
// Vertex operators

FactorChain build_vertex(const Partition& pi, const std::string& var) {
  FactorChain ch;
  ch.vars = {var};
  ch.factors.push_back(multiply_by(Family::M, {1}, {}, {1}));
  ch.factors.push_back(skew_by(Family::L, {1}, {}, {-1}));
  for (int k = 1; k <= pi[0]; ++k)
    ch.factors.push_back(skew_by(Family::L, pi, {Partition::row(k)}, {k}));
  return ch;
}

FactorChain build_dual_vertex(const Partition& pi, const std::string& var) {
  FactorChain ch;
  ch.vars = {var};
  ch.factors.push_back(multiply_by(Family::L, {1}, {}, {1}));
  ch.factors.push_back(skew_by(Family::M, {1}, {}, {-1}));
  for (int k = 1; k <= pi.length(); k += 2)
    ch.factors.push_back(skew_by(Family::M, pi, {Partition::column(k)}, {k}));
  for (int k = 2; k <= pi.length(); k += 2)
    ch.factors.push_back(skew_by(Family::L, pi, {Partition::column(k)}, {k}));
  return ch;
}

FactorChain full_vertex(const Partition& pi, ModeKind kind, const std::string& var) {
  if (kind == ModeKind::X) {
    FactorChain ch = build_vertex(pi, var);
    ch.zero_modes = {ZeroMode::raise(), ZeroMode::alpha(0, +1)};
    return ch;
  }
  FactorChain ch = build_dual_vertex(pi, var);
  ch.zero_modes = {ZeroMode::alpha(0, -1), ZeroMode::lower()};
  return ch;
}

namespace {

using BasisKey = std::tuple<Partition, int, int, Partition>;

/// [z^e] V_pi(z) s_mu (or V*), cached per basis element.
SymFunc vertex_coefficient(const Partition& pi, ModeKind kind, int e, const Partition& mu) {
  static detail::Memo<BasisKey, SymFunc> memo;
  return memo.get_or_compute({pi, static_cast<int>(kind), e, mu}, [&] {
    const FactorChain ch = kind == ModeKind::X ? build_vertex(pi) : build_dual_vertex(pi);
    auto res = apply_factors(ch, schur(mu), {{e, e}});
    auto it = res.coeffs.find({e});
    return it == res.coeffs.end() ? SymFunc{} : it->second;
  });
}

}  // namespace

ChargedState mode(const Partition& pi, ModeKind kind, int m, const ChargedState& state,
                  ModeConvention convention) {
  const FactorChain full = full_vertex(pi, kind);
  ChargedState out;
  for (const auto& [c, f] : state.sectors) {
    auto [charge, offset] = act_zero_modes(full.zero_modes, 1, c);
    const int shift = convention == ModeConvention::ChargeTwisted ? offset[0] : 0;
    const int e = -m - shift;
    SymFunc acc;
    for (const auto& [mu, k] : f) acc += vertex_coefficient(pi, kind, e, mu) * k;
    out.add(charge, acc);
  }
  return out;
}

ChargedState anticommutator(const Partition& pi_a, ModeKind kind_a, int m,
                            const Partition& pi_b, ModeKind kind_b, int n,
                            const ChargedState& state, ModeConvention convention) {
  if (pi_a != pi_b)
    throw std::invalid_argument("anticommutator: mixed shapes " + pi_a.to_string() + " and " +
                                pi_b.to_string() + " are not supported");
  ChargedState ab = mode(pi_a, kind_a, m, mode(pi_b, kind_b, n, state, convention), convention);
  ab += mode(pi_b, kind_b, n, mode(pi_a, kind_a, m, state, convention), convention);
  return ab;
}

namespace {

std::vector<std::string> numbered_vars(int m) {
  std::vector<std::string> v;
  for (int i = 1; i <= m; ++i) v.push_back("z" + std::to_string(i));
  return v;
}

}  // namespace

FactorChain vertex_product(const Partition& pi, const std::vector<VertexKind>& kinds,
                           const std::vector<std::string>& vars) {
  if (kinds.size() != vars.size())
    throw std::invalid_argument("vertex_product: one variable per operator");
  FactorChain out;
  out.vars = vars;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    FactorChain one = kinds[i] == VertexKind::V ? build_vertex(pi, vars[i])
                                                : build_dual_vertex(pi, vars[i]);
    out = compose(out, one);
  }
  return rebase(out, vars);
}

SymFunc vertex_string(const Partition& pi, const Partition& lambda, bool dual, int max_length) {
  const int m = lambda.length();
  if (m == 0) return SymFunc::one();
  if (m > max_length)
    throw BudgetExceeded("vertex_string: length " + std::to_string(m) + " exceeds bound " +
                         std::to_string(max_length));
  const auto vars = numbered_vars(m);
  const FactorChain ch = vertex_product(
      pi, std::vector<VertexKind>(static_cast<std::size_t>(m), dual ? VertexKind::Vstar : VertexKind::V),
      vars);
  Window w;
  for (int p : lambda.parts()) w.emplace_back(p, p);
  auto res = apply_factors(ch, SymFunc::one(), w);
  auto it = res.coeffs.find(lambda.parts());
  return it == res.coeffs.end() ? SymFunc{} : it->second;
}

namespace {

/// All index vectors of length m with entries >= 0 and sum <= bound.
void index_vectors(int m, int bound, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (int v : cur) used += v;
  for (int i = 0; used + i <= bound; ++i) {
    cur.push_back(i);
    index_vectors(m, bound, cur, out);
    cur.pop_back();
  }
}

bool nonzero(const std::vector<int>& v) {
  return std::any_of(v.begin(), v.end(), [](int i) { return i != 0; });
}

void push_if_live(FactorChain& ch, Factor f) {
  if (f.spec.inner_degree() >= 0) ch.factors.push_back(std::move(f));
}

}  // namespace

NormalOrdered normal_order_product(const Partition& pi, const std::vector<VertexKind>& kinds,
                                   const std::vector<std::string>& vars) {
  const std::size_t m = kinds.size();
  if (vars.size() != m) throw std::invalid_argument("normal_order_product: one variable per operator");
  if (m == 0) return {FactorChain{}, "1"};
  if (m == 1) {
    FactorChain ch = kinds[0] == VertexKind::V ? build_vertex(pi, vars[0])
                                               : build_dual_vertex(pi, vars[0]);
    return {ch, "1"};
  }
  const bool homogeneous =
      std::all_of(kinds.begin(), kinds.end(), [&](VertexKind k) { return k == kinds[0]; });
  FactorChain ch;
  ch.vars = vars;
  const int p = pi.weight();

  if (homogeneous) {
    std::string pre;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        std::vector<int> e(m, 0);
        e[i] = -1;
        e[j] = 1;
        ch.factors.push_back(multiply_by(Family::L, {}, {}, e));
        pre += "(1 - " + vars[j] + "/" + vars[i] + ")";
      }
    const bool dual = kinds[0] == VertexKind::Vstar;
    for (std::size_t l = 0; l < m; ++l)
      ch.factors.push_back(multiply_by(dual ? Family::L : Family::M, {1}, {}, unit_exps(m, l, 1)));
    for (std::size_t l = 0; l < m; ++l)
      ch.factors.push_back(skew_by(dual ? Family::M : Family::L, {1}, {}, unit_exps(m, l, -1)));
    std::vector<std::vector<int>> idx;
    std::vector<int> scratch;
    index_vectors(static_cast<int>(m), p, scratch, idx);
    for (const auto& v : idx) {
      if (!nonzero(v)) continue;
      std::vector<Partition> removed;
      int total = 0;
      for (int i : v) {
        removed.push_back(dual ? Partition::column(i) : Partition::row(i));
        total += i;
      }
      const Family f = dual && total % 2 ? Family::M : Family::L;
      push_if_live(ch, skew_by(f, pi, removed, v));
    }
    return {ch, pre.empty() ? "1" : pre};
  }

  if (m != 2) throw std::invalid_argument("normal_order_product: mixed strings longer than 2");
  ch.factors.push_back(multiply_by(Family::M, {}, {}, {-1, 1}));
  const std::string pre = "(1 - " + vars[1] + "/" + vars[0] + ")^-1";
  if (kinds[0] == VertexKind::V) {
    // R_pi(z,w)
    ch.factors.push_back(multiply_by(Family::M, {1}, {}, {1, 0}));
    ch.factors.push_back(multiply_by(Family::L, {1}, {}, {0, 1}));
    ch.factors.push_back(skew_by(Family::L, {1}, {}, {-1, 0}));
    ch.factors.push_back(skew_by(Family::M, {1}, {}, {0, -1}));
    for (int i = 0; i <= p; ++i)
      for (int j = 0; i + 2 * j <= p; ++j)
        if (i || j) push_if_live(ch, skew_by(Family::L, pi, {Partition::row(i), Partition::column(2 * j)}, {i, 2 * j}));
    for (int i = 0; i <= p; ++i)
      for (int j = 0; i + 2 * j + 1 <= p; ++j)
        push_if_live(ch, skew_by(Family::M, pi, {Partition::row(i), Partition::column(2 * j + 1)}, {i, 2 * j + 1}));
  } else {
    // S_pi(z,w)
    ch.factors.push_back(multiply_by(Family::L, {1}, {}, {1, 0}));
    ch.factors.push_back(multiply_by(Family::M, {1}, {}, {0, 1}));
    ch.factors.push_back(skew_by(Family::M, {1}, {}, {-1, 0}));
    ch.factors.push_back(skew_by(Family::L, {1}, {}, {0, -1}));
    for (int i = 0; 2 * i + 1 <= p; ++i)
      for (int j = 0; 2 * i + 1 + j <= p; ++j)
        push_if_live(ch, skew_by(Family::M, pi, {Partition::column(2 * i + 1), Partition::row(j)}, {2 * i + 1, j}));
    for (int i = 0; 2 * i <= p; ++i)
      for (int j = 0; 2 * i + j <= p; ++j)
        if (i || j) push_if_live(ch, skew_by(Family::L, pi, {Partition::column(2 * i), Partition::row(j)}, {2 * i, j}));
  }
  return {ch, pre};
}

FactorChain diagonal_r_chain(const Partition& pi, const std::string& var) {
  FactorChain ch;
  ch.vars = {var};
  ch.factors.push_back(multiply_by(Family::M, {1}, {}, {1}));
  ch.factors.push_back(multiply_by(Family::L, {1}, {}, {1}));
  ch.factors.push_back(skew_by(Family::L, {1}, {}, {-1}));
  ch.factors.push_back(skew_by(Family::M, {1}, {}, {-1}));
  const int p = pi.weight();
  for (int a = 0; a + 1 <= p; ++a)
    for (int b = 0; a + 1 + b <= p; ++b) {
      std::vector<int> hook{a + 1};
      hook.insert(hook.end(), static_cast<std::size_t>(b), 1);
      const Partition h(std::move(hook));
      if (!pi.contains(h)) continue;
      ch.factors.push_back(skew_by(Family::M, pi, {h}, {h.weight()}));
      ch.factors.push_back(skew_by(Family::L, pi, {h}, {h.weight()}));
    }
  return ch;
}

}  // namespace pvo
