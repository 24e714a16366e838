#include "pvo/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pvo/oracle.hpp"
#include "pvo/plethysm.hpp"
#include "pvo/serialize.hpp"
#include "pvo/vertex.hpp"

namespace pvo {

namespace {

/// One independent unit of work. `run` appends failures and returns how many
/// individual comparisons it made.
struct Case {
  std::function<long(std::vector<FailureRecord>&)> run;
};

VerificationReport run_suite(const std::string& suite, Json config, const std::vector<Case>& cases,
                             const RunOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::vector<FailureRecord>> failures(cases.size());
  std::vector<long> counts(cases.size(), 0);
  std::vector<std::exception_ptr> errors(cases.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cases.size();) {
      try {
        counts[i] = cases[i].run(failures[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t jobs =
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(opts.jobs, 1)), 1, std::max<std::size_t>(cases.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  VerificationReport r;
  r.suite = suite;
  r.config = std::move(config);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    r.cases_run += counts[i];
    for (auto& f : failures[i]) r.failures.push_back(std::move(f));
  }
  if (opts.timing)
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return r;
}

Json interval_json(const Interval& i) { return Json::array({i.lo, i.hi}); }

Json partitions_json(const std::vector<Partition>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(partition_to_json(p));
  return a;
}

std::vector<Partition> partitions_up_to(int max_weight, int min_weight = 0, int max_length = -1) {
  std::vector<Partition> out;
  for (int w = min_weight; w <= max_weight; ++w)
    for (auto& p : max_length >= 0 ? partitions_of(w, max_length) : partitions_of(w))
      out.push_back(std::move(p));
  return out;
}

/// Compares two Laurent maps exponent by exponent; a missing key is zero.
long compare_laurent(const LaurentMap& lhs, const LaurentMap& rhs, const Json& inputs,
                     std::vector<FailureRecord>& out) {
  std::vector<std::vector<int>> keys;
  for (const auto& [e, v] : lhs.coeffs) keys.push_back(e);
  for (const auto& [e, v] : rhs.coeffs) keys.push_back(e);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto& e : keys) {
    auto a = lhs.coeffs.find(e);
    auto b = rhs.coeffs.find(e);
    const SymFunc l = a == lhs.coeffs.end() ? SymFunc{} : a->second;
    const SymFunc r = b == rhs.coeffs.end() ? SymFunc{} : b->second;
    if (l == r) continue;
    Json in = inputs;
    in["exp"] = e;
    out.push_back({in, symfunc_to_json(l), symfunc_to_json(r)});
  }
  return 1;
}

long compare_symfunc(const SymFunc& lhs, const SymFunc& rhs, const Json& inputs,
                     std::vector<FailureRecord>& out) {
  if (!(lhs == rhs)) out.push_back({inputs, symfunc_to_json(lhs), symfunc_to_json(rhs)});
  return 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Reordering

std::string to_string(ReorderCase c) {
  switch (c) {
    case ReorderCase::MM: return "MM";
    case ReorderCase::LM: return "LM";
    case ReorderCase::ML: return "ML";
    case ReorderCase::LL: return "LL";
  }
  return "?";
}

ReorderCase parse_reorder_case(const std::string& s) {
  for (auto c : {ReorderCase::MM, ReorderCase::LM, ReorderCase::ML, ReorderCase::LL})
    if (to_string(c) == s) return c;
  throw std::invalid_argument("unknown reordering case '" + s + "' (expected MM, LM, ML or LL)");
}

namespace {

Family other(Family f) { return f == Family::M ? Family::L : Family::M; }

// The first letter names the pi-series being skewed, the second the series
// multiplied in: case LM is L_pi^perp(z) M(w).
FactorChain reorder_lhs(ReorderCase c, const Partition& pi) {
  const Family skewed = c == ReorderCase::MM || c == ReorderCase::ML ? Family::M : Family::L;
  const Family mult = c == ReorderCase::MM || c == ReorderCase::LM ? Family::M : Family::L;
  FactorChain ch;
  ch.vars = {"z", "w"};
  ch.factors.push_back(skew_by(skewed, pi, {}, {1, 0}));
  ch.factors.push_back(multiply_by(mult, {1}, {}, {0, 1}));
  return ch;
}

FactorChain reorder_rhs(ReorderCase c, const Partition& pi, bool perturb) {
  FactorChain ch;
  ch.vars = {"z", "w"};
  auto add = [&](Family f, const Partition& removed, int k) {
    if (perturb && k == 0) f = other(f);
    if (!pi.contains(removed)) return;
    ch.factors.push_back(skew_by(f, pi, {removed}, {1, k}));
  };
  switch (c) {
    case ReorderCase::MM:
    case ReorderCase::LM: {
      const Family f = c == ReorderCase::MM ? Family::M : Family::L;
      ch.factors.push_back(multiply_by(Family::M, {1}, {}, {0, 1}));
      for (int k = 0; k <= pi[0]; ++k) add(f, Partition::row(k), k);
      break;
    }
    case ReorderCase::ML:
    case ReorderCase::LL: {
      // Even columns keep the family of the skewed series, odd ones flip it.
      const Family even = c == ReorderCase::ML ? Family::M : Family::L;
      ch.factors.push_back(multiply_by(Family::L, {1}, {}, {0, 1}));
      for (int k = 0; k <= pi.length(); ++k)
        add(k % 2 ? other(even) : even, Partition::column(k), k);
      break;
    }
  }
  return ch;
}

}  // namespace

VerificationReport verify_reordering(const ReorderingConfig& cfg, const RunOptions& run) {
  const auto pis = cfg.pis.empty() ? partitions_up_to(cfg.max_pi_weight, 1) : cfg.pis;
  for (const auto& p : pis)
    if (p.empty()) throw std::invalid_argument("reordering: pi must be nonempty");
  Json cases_json = Json::array();
  for (auto c : cfg.cases) cases_json.push_back(to_string(c));
  Json config = {{"cases", cases_json},
                 {"pis", partitions_json(pis)},
                 {"z_range", interval_json(cfg.z_range)},
                 {"w_range", interval_json(cfg.w_range)},
                 {"test_degree", cfg.test_degree},
                 {"perturb", cfg.perturb}};

  const Window window{{cfg.z_range.lo, cfg.z_range.hi}, {cfg.w_range.lo, cfg.w_range.hi}};
  const auto lambdas = partitions_up_to(cfg.test_degree);
  std::vector<Case> cases;
  for (auto c : cfg.cases)
    for (const auto& pi : pis) {
      const FactorChain lhs = reorder_lhs(c, pi);
      const FactorChain rhs = reorder_rhs(c, pi, cfg.perturb);
      for (const auto& lambda : lambdas)
        cases.push_back({[=](std::vector<FailureRecord>& out) {
          Json in = {{"case", to_string(c)}, {"pi", partition_to_json(pi)},
                     {"lambda", partition_to_json(lambda)}};
          return compare_laurent(apply_factors(lhs, SymFunc(lambda), window),
                                 apply_factors(rhs, SymFunc(lambda), window), in, out);
        }});
    }
  return run_suite("reordering", std::move(config), cases, run);
}

// ---------------------------------------------------------------------------
// Zero modes

namespace {

struct ZeroModeIdentity {
  std::string name;
  std::vector<ZeroMode> lhs;
  ZeroModeNormalForm rhs;
};

// Variables are (z, w). X(z) contributes e^{iq} z^{alpha_0}; X*(w)
// contributes w^{-alpha_0} e^{-iq}.
std::vector<ZeroModeIdentity> zero_mode_identities(bool perturb) {
  const auto R = ZeroMode::raise();
  const auto L = ZeroMode::lower();
  auto A = ZeroMode::alpha;
  std::vector<ZeroModeIdentity> ids{
      // (1/(z w^2)) (zw)^{alpha_0} e^{2iq}
      {"X(z)X(w)", {R, A(0, 1), R, A(1, 1)}, {{-1, -2}, {1, 1}, 2}},
      // (1/w) (zw)^{-alpha_0} e^{-2iq}
      {"X*(z)X*(w)", {A(0, -1), L, A(1, -1), L}, {{0, -1}, {-1, -1}, -2}},
      // (w/z) (z/w)^{alpha_0}
      {"X(z)X*(w)", {R, A(0, 1), A(1, -1), L}, {{-1, 1}, {1, -1}, 0}},
      // (z/w)^{alpha_0}
      {"X*(w)X(z)", {A(1, -1), L, R, A(0, 1)}, {{0, 0}, {1, -1}, 0}},
  };
  if (perturb) ids[0].rhs.constant = {-2, -1};
  return ids;
}

Json charged_monomial_json(const std::pair<int, std::vector<int>>& a) {
  return {{"charge", a.first}, {"exp", a.second}};
}

}  // namespace

VerificationReport verify_zero_modes(const ZeroModesConfig& cfg, const RunOptions& run) {
  Json config = {{"charges", interval_json(cfg.charges)}, {"perturb", cfg.perturb}};
  std::vector<Case> cases;
  for (const auto& id : zero_mode_identities(cfg.perturb)) {
    cases.push_back({[id](std::vector<FailureRecord>& out) {
      // The symbolic normal form must match as well as every concrete action.
      const auto nf = zero_mode_normal_form(id.lhs, 2);
      if (!(nf == id.rhs))
        out.push_back({{{"identity", id.name}, {"form", "normal"}},
                       {{"constant", nf.constant}, {"alpha", nf.alpha}, {"shift", nf.shift}},
                       {{"constant", id.rhs.constant}, {"alpha", id.rhs.alpha}, {"shift", id.rhs.shift}}});
      return 1L;
    }});
    for (int c = cfg.charges.lo; c <= cfg.charges.hi; ++c)
      cases.push_back({[id, c](std::vector<FailureRecord>& out) {
        const auto l = act_zero_modes(id.lhs, 2, c);
        const auto r = id.rhs.act(c);
        if (l != r)
          out.push_back({{{"identity", id.name}, {"charge", c}}, charged_monomial_json(l),
                         charged_monomial_json(r)});
        return 1L;
      }});
  }
  return run_suite("zero-modes", std::move(config), cases, run);
}

// ---------------------------------------------------------------------------
// Clifford

VerificationReport verify_clifford(const CliffordConfig& cfg, const RunOptions& run) {
  Json config = {{"pis", partitions_json(cfg.pis)},
                 {"modes", interval_json(cfg.modes)},
                 {"degree_bound", cfg.degree_bound},
                 {"charges", interval_json(cfg.charges)},
                 {"perturb", cfg.perturb}};
  const auto convention = cfg.perturb ? ModeConvention::ChargeFree : ModeConvention::ChargeTwisted;
  const auto lambdas = partitions_up_to(cfg.degree_bound);
  const Interval modes = cfg.modes;

  std::vector<Case> cases;
  for (const auto& pi : cfg.pis)
    for (int c = cfg.charges.lo; c <= cfg.charges.hi; ++c)
      for (const auto& lambda : lambdas)
        cases.push_back({[=](std::vector<FailureRecord>& out) {
          const ChargedState state = ChargedState::pure(c, SymFunc(lambda));
          long n_checks = 0;
          auto check = [&](ModeKind a, ModeKind b, int m, int n) {
            ++n_checks;
            const ChargedState got = anticommutator(pi, a, m, pi, b, n, state, convention);
            const ChargedState want = a != b && m + n == 0 ? state : ChargedState{};
            if (got == want) return;
            auto name = [](ModeKind k) { return k == ModeKind::X ? "X" : "Xstar"; };
            out.push_back({{{"pi", partition_to_json(pi)},
                            {"charge", c},
                            {"lambda", partition_to_json(lambda)},
                            {"a", name(a)},
                            {"m", m},
                            {"b", name(b)},
                            {"n", n}},
                           state_to_json(got), state_to_json(want)});
          };
          for (int m = modes.lo; m <= modes.hi; ++m)
            for (int n = m; n <= modes.hi; ++n) {
              check(ModeKind::X, ModeKind::X, m, n);
              check(ModeKind::Xstar, ModeKind::Xstar, m, n);
            }
          for (int m = modes.lo; m <= modes.hi; ++m)
            for (int n = modes.lo; n <= modes.hi; ++n) check(ModeKind::X, ModeKind::Xstar, m, n);
          return n_checks;
        }});
  return run_suite("clifford", std::move(config), cases, run);
}

// ---------------------------------------------------------------------------
// Multi-vertex normal ordering

VerificationReport verify_multivertex(const MultivertexConfig& cfg, const RunOptions& run) {
  Json lengths = cfg.lengths;
  Json config = {{"pis", partitions_json(cfg.pis)},   {"lengths", lengths},
                 {"mixed", cfg.mixed},                {"window", interval_json(cfg.window)},
                 {"inputs", partitions_json(cfg.inputs)}, {"perturb", cfg.perturb}};
  for (int m : cfg.lengths)
    if (m < 1 || m > 3) throw std::invalid_argument("multivertex: lengths must lie in 1..3");

  std::vector<std::vector<VertexKind>> strings;
  for (int m : cfg.lengths) {
    strings.emplace_back(static_cast<std::size_t>(m), VertexKind::V);
    strings.emplace_back(static_cast<std::size_t>(m), VertexKind::Vstar);
  }
  if (cfg.mixed) {
    strings.push_back({VertexKind::V, VertexKind::Vstar});
    strings.push_back({VertexKind::Vstar, VertexKind::V});
  }

  std::vector<Case> cases;
  for (const auto& pi : cfg.pis)
    for (const auto& kinds : strings) {
      const std::size_t m = kinds.size();
      std::vector<std::string> vars;
      std::string word;
      for (std::size_t i = 0; i < m; ++i) {
        vars.push_back("z" + std::to_string(i + 1));
        word += kinds[i] == VertexKind::V ? "V" : "V*";
      }
      const FactorChain lhs = vertex_product(pi, kinds, vars);
      FactorChain rhs = normal_order_product(pi, kinds, vars).chain;
      if (cfg.perturb) {
        const bool homogeneous = std::all_of(kinds.begin(), kinds.end(),
                                             [&](VertexKind k) { return k == kinds[0]; });
        const std::size_t n_pre = homogeneous ? m * (m - 1) / 2 : 1;
        rhs.factors.erase(rhs.factors.begin(),
                          rhs.factors.begin() + static_cast<std::ptrdiff_t>(std::min(n_pre, rhs.factors.size())));
      }
      const Window window(m, {cfg.window.lo, cfg.window.hi});
      for (const auto& input : cfg.inputs)
        cases.push_back({[=](std::vector<FailureRecord>& out) {
          Json in = {{"pi", partition_to_json(pi)}, {"string", word},
                     {"input", partition_to_json(input)}};
          return compare_laurent(apply_factors(lhs, SymFunc(input), window),
                                 apply_factors(rhs, SymFunc(input), window), in, out);
        }});
    }
  return run_suite("multivertex", std::move(config), cases, run);
}

// ---------------------------------------------------------------------------
// Theorem 2

VerificationReport verify_theorem2(const Theorem2Config& cfg, const RunOptions& run) {
  const auto pis = cfg.pis.empty() ? partitions_up_to(cfg.max_pi_weight, 1) : cfg.pis;
  for (const auto& p : pis)
    if (p.empty()) throw std::invalid_argument("theorem2: pi must be nonempty");
  Json config = {{"pis", partitions_json(pis)},
                 {"max_weight", cfg.max_weight},
                 {"max_length", cfg.max_length},
                 {"oracle", cfg.oracle},
                 {"perturb", cfg.perturb}};
  const auto lambdas = partitions_up_to(cfg.max_weight, 0, cfg.max_length);
  const int max_length = std::max(cfg.max_length, 1);
  const bool use_oracle = cfg.oracle;
  const bool perturb = cfg.perturb;

  std::vector<Case> cases;
  for (const auto& pi : pis)
    for (const auto& lambda : lambdas)
      cases.push_back({[=](std::vector<FailureRecord>& out) {
        long n = 0;
        auto in = [&](const char* identity, const char* route) {
          return Json{{"pi", partition_to_json(pi)},
                      {"lambda", partition_to_json(lambda)},
                      {"identity", identity},
                      {"route", route}};
        };
        const SymFunc perp = pi_schur(pi, lambda);
        n += compare_symfunc(vertex_string(pi, lambda, false, max_length), perp, in("pi-schur", "vertex"), out);
        n += compare_symfunc(cauchy_pi_schur(pi, lambda), perp, in("pi-schur", "cauchy"), out);
        if (use_oracle)
          n += compare_symfunc(oracle::oracle_pi_schur(pi, lambda), perp, in("pi-schur", "oracle"), out);

        const SymFunc dperp = dual_pi_schur(pi, lambda);
        n += compare_symfunc(vertex_string(pi, lambda, true, max_length), dperp, in("dual-pi-schur", "vertex"), out);
        n += compare_symfunc(cauchy_dual_pi_schur(pi, lambda), dperp, in("dual-pi-schur", "cauchy"), out);
        if (use_oracle)
          n += compare_symfunc(oracle::oracle_dual_pi_schur(pi, lambda), dperp,
                               in("dual-pi-schur", "oracle"), out);

        // The conjugation identity through the two Cauchy routes, which do not
        // share the definition of the perp route.
        const Rational sign = lambda.weight() % 2 && !perturb ? -1 : 1;
        n += compare_symfunc(cauchy_dual_pi_schur(pi, lambda),
                             sign * cauchy_pi_schur(pi, lambda.conjugate()), in("conjugation", "cauchy"), out);

        // Branching inverts the pi-Schur map.
        const SeriesSpec m_pi(Family::M, pi);
        n += compare_symfunc(series_perp_at_one(m_pi, perp), SymFunc(lambda), in("branch", "perp"), out);
        const Rational dsign = lambda.weight() % 2 ? -1 : 1;
        n += compare_symfunc(dsign * series_perp_at_one(m_pi, dperp), SymFunc(lambda.conjugate()),
                             in("dual-branch", "perp"), out);
        return n;
      }});
  return run_suite("theorem2", std::move(config), cases, run);
}

// ---------------------------------------------------------------------------
// Inverse series and the diagonal collapse

namespace {

// Pairings of x-degree beyond this go through the plethysm homomorphism.
constexpr int kDirectPairingDegree = 14;

/// sum_{a+b=r} M_a L_b for the series with the given inner data.
SymFunc series_pairing(const SeriesSpec& m, const SeriesSpec& l, int r) {
  SymFunc acc;
  for (int a = 0; a <= r; ++a) {
    const SymFunc x = series_term(m, a, std::max(kDefaultDegreeBudget, r * m.inner_degree()));
    if (x.is_zero()) continue;
    const SymFunc y = series_term(l, r - a, std::max(kDefaultDegreeBudget, r * l.inner_degree()));
    acc += product(x, y);
  }
  return acc;
}

/// sum_{a+b=r} h_a (-1)^b e_b, or h_a h_b when perturbed. Plethysm into any g
/// is a ring homomorphism, so this vanishing makes every pairing vanish.
SymFunc universal_pairing(int r, bool perturb) {
  SymFunc acc;
  for (int a = 0; a <= r; ++a) {
    const int b = r - a;
    const SymFunc right = perturb ? h(b) : e(b) * Rational(b % 2 ? -1 : 1);
    acc += product(h(a), right);
  }
  return acc;
}

std::vector<Partition> hooks_in(const Partition& pi) {
  std::vector<Partition> out;
  const int p = pi.weight();
  for (int a = 1; a <= p; ++a)
    for (int b = 0; a + b <= p; ++b) {
      std::vector<int> parts{a};
      parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
      Partition hk(std::move(parts));
      if (pi.contains(hk)) out.push_back(std::move(hk));
    }
  return out;
}

}  // namespace

VerificationReport verify_inverse_series(const InverseSeriesConfig& cfg, const RunOptions& run) {
  Json config = {{"max_sigma_weight", cfg.max_sigma_weight},
                 {"max_degree", cfg.max_degree},
                 {"max_pi_weight", cfg.max_pi_weight},
                 {"max_z_weight", cfg.max_z_weight},
                 {"operator_degree", cfg.operator_degree},
                 {"window", interval_json(cfg.window)},
                 {"perturb", cfg.perturb}};
  const bool perturb = cfg.perturb;
  const Family partner = perturb ? Family::M : Family::L;
  std::vector<Case> cases;

  // M_sigma L_sigma = 1, degree by degree.
  for (const auto& sigma : partitions_up_to(cfg.max_sigma_weight, 1))
    for (int r = 1; r * sigma.weight() <= cfg.max_degree; ++r)
      cases.push_back({[=](std::vector<FailureRecord>& out) {
        return compare_symfunc(
            series_pairing(SeriesSpec(Family::M, sigma), SeriesSpec(partner, sigma), r), SymFunc{},
            {{"identity", "M*L"}, {"sigma", partition_to_json(sigma)}, {"r", r}}, out);
      }});

  // Hook pairings of R_pi(z,z): the z^r coefficient of every paired factor.
  for (const auto& pi : partitions_up_to(cfg.max_pi_weight, 1))
    for (const auto& hook : hooks_in(pi))
      for (int r = hook.weight(); r <= cfg.max_z_weight; r += hook.weight())
        cases.push_back({[=](std::vector<FailureRecord>& out) {
          const int a = r / hook.weight();
          const SeriesSpec m(Family::M, pi, {hook});
          const SeriesSpec l(partner, pi, {hook});
          Json in = {{"identity", "hook-pairing"}, {"pi", partition_to_json(pi)},
                     {"hook", partition_to_json(hook)}, {"r", r}};
          const int deg = a * std::max(m.inner_degree(), 0);
          if (deg <= kDirectPairingDegree) return compare_symfunc(series_pairing(m, l, a), SymFunc{}, in, out);
          in["route"] = "homomorphism";
          return compare_symfunc(universal_pairing(a, perturb), SymFunc{}, in, out);
        }});

  // sum_{2i+j+1=n} e_{2i+1} h_j is the sum of all hooks of n.
  for (int n = 1; n <= cfg.max_z_weight; ++n)
    cases.push_back({[=](std::vector<FailureRecord>& out) {
      SymFunc lhs, rhs;
      for (int k = 1; k <= n; k += 2) lhs += product(e(k), h(n - k));
      for (int a = 0; a + 1 <= n; ++a) {
        std::vector<int> parts{a + 1};
        parts.insert(parts.end(), static_cast<std::size_t>(n - a - 1), 1);
        rhs += SymFunc(Partition(std::move(parts)));
      }
      return compare_symfunc(lhs, rhs, {{"identity", "odd-hooks"}, {"n", n}}, out);
    }});

  // R_pi(z,z) acts as the identity.
  const Window window{{cfg.window.lo, cfg.window.hi}};
  for (const auto& pi : partitions_up_to(cfg.max_pi_weight, 1)) {
    FactorChain ch = diagonal_r_chain(pi);
    if (perturb)
      for (auto& f : ch.factors)
        if (f.spec.family == Family::L) f.spec.family = Family::M;
    for (const auto& lambda : partitions_up_to(cfg.operator_degree))
      cases.push_back({[=](std::vector<FailureRecord>& out) {
        LaurentMap want;
        want.vars = ch.vars;
        if (cfg.window.lo <= 0 && 0 <= cfg.window.hi) want.coeffs.emplace(std::vector<int>{0}, SymFunc(lambda));
        return compare_laurent(apply_factors(ch, SymFunc(lambda), window), want,
                               {{"identity", "R(z,z)"}, {"pi", partition_to_json(pi)},
                                {"lambda", partition_to_json(lambda)}},
                               out);
      }});
  }
  return run_suite("inverse-series", std::move(config), cases, run);
}

// ---------------------------------------------------------------------------

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.cases_run << " checks, "
     << r.failures.size() << " failures";
  if (r.elapsed_ms) os << ", " << r.elapsed_ms << " ms";
  os << ")\n";
  for (const auto& f : r.failures)
    os << "  at " << dump(f.inputs) << "\n    lhs " << dump(f.lhs) << "\n    rhs " << dump(f.rhs) << "\n";
  return os.str();
}

}  // namespace pvo
