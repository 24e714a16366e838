#include "pvo/plethysm.hpp"

#include <algorithm>

#include "pvo/memo.hpp"

namespace pvo {

namespace {

/// p_n applied to g: every p_rho becomes p_{n rho}; scalars are untouched.
PowerExpr scale_power_indices(const PowerExpr& g, int n) {
  PowerExpr out;
  for (const auto& [rho, c] : g) {
    std::vector<int> parts = rho.parts();
    for (int& part : parts) part *= n;
    out.add(Partition(std::move(parts)), c);
  }
  return out;
}

Rational generalized_binomial(const Rational& top, int r) {
  Rational acc = 1;
  for (int i = 0; i < r; ++i) acc = acc * (top - i) / Rational(i + 1);
  return acc;
}

std::optional<Rational> as_scalar(const SymFunc& f) {
  if (f.is_zero()) return Rational(0);
  if (f.size() == 1 && f.begin()->first.empty()) return f.begin()->second;
  return std::nullopt;
}

bool is_single_box(const SymFunc& f) {
  return f.size() == 1 && f.begin()->first == Partition{1} && f.begin()->second == 1;
}

SeriesSpec normalized(SeriesSpec spec) {
  std::erase_if(spec.removed, [](const Partition& p) { return p.empty(); });
  std::sort(spec.removed.begin(), spec.removed.end(), RevLex{});
  return spec;
}

const SymFunc& cached_inner(const SeriesSpec& spec) {
  static std::mutex guard;
  static std::map<std::pair<Partition, std::vector<Partition>>, SymFunc> table;
  auto key = std::make_pair(spec.base, spec.removed);
  {
    std::lock_guard lock(guard);
    auto it = table.find(key);
    if (it != table.end()) return it->second;
  }
  SymFunc value = skew_by_sequence(spec.base, spec.removed);
  std::lock_guard lock(guard);
  return table.try_emplace(std::move(key), std::move(value)).first->second;
}

}  // namespace

SymFunc plethysm(const SymFunc& outer, const SymFunc& inner, int degree_budget) {
  if (outer.is_zero()) return {};
  const int d_out = outer.max_degree();
  const int d_in = std::max(inner.max_degree(), 0);
  if (d_out * d_in > degree_budget)
    throw BudgetExceeded("plethysm result degree " + std::to_string(d_out * d_in) +
                         " exceeds budget " + std::to_string(degree_budget));
  const PowerExpr outer_p = to_power_basis(outer);
  const PowerExpr inner_p = to_power_basis(inner);

  std::map<int, PowerExpr> substituted;
  auto p_n_of_inner = [&](int n) -> const PowerExpr& {
    auto it = substituted.find(n);
    if (it == substituted.end())
      it = substituted.emplace(n, scale_power_indices(inner_p, n)).first;
    return it->second;
  };

  PowerExpr result;
  for (const auto& [rho, c] : outer_p) {
    PowerExpr term = PowerExpr::constant(c);
    for (int part : rho.parts()) {
      term = term * p_n_of_inner(part);
      if (term.is_zero()) break;
    }
    result += term;
  }
  return from_power_basis(result);
}

std::string to_string(Family f) { return f == Family::M ? "M" : "L"; }

SeriesSpec::SeriesSpec(Family f, Partition b, std::vector<Partition> r)
    : family(f), base(std::move(b)), removed(std::move(r)) {
  *this = normalized(std::move(*this));
}

SymFunc SeriesSpec::inner() const { return cached_inner(normalized(*this)); }

int SeriesSpec::inner_degree() const {
  const SymFunc& f = cached_inner(normalized(*this));
  return f.is_zero() ? -1 : f.max_degree();
}

std::string SeriesSpec::to_string() const {
  std::string s = pvo::to_string(family) + "_" + base.to_string();
  for (const auto& k : removed) s += "/" + k.to_string();
  return s;
}

SymFunc series_term(const SeriesSpec& raw_spec, int r, int degree_budget) {
  if (r < 0) return {};
  if (r == 0) return SymFunc::one();
  const SeriesSpec spec = normalized(raw_spec);
  const SymFunc& inner = cached_inner(spec);
  if (inner.is_zero()) return {};

  if (auto c = as_scalar(inner)) {
    Rational v = spec.family == Family::M ? generalized_binomial(*c + r - 1, r)
                                          : generalized_binomial(*c, r);
    if (spec.family == Family::L && r % 2) v = -v;
    return SymFunc::constant(v);
  }
  if (is_single_box(inner)) {
    return spec.family == Family::M ? h(r) : (r % 2 ? -e(r) : e(r));
  }

  const int degree = r * inner.max_degree();
  if (degree > degree_budget)
    throw BudgetExceeded("series term degree " + std::to_string(degree) +
                         " exceeds budget " + std::to_string(degree_budget));

  static detail::Memo<std::pair<SeriesSpec, int>, SymFunc> memo;
  return memo.get_or_compute({spec, r}, [&] {
    SymFunc outer = spec.family == Family::M ? h(r) : e(r);
    SymFunc t = plethysm(outer, inner, degree_budget);
    if (spec.family == Family::L && r % 2) t *= Rational(-1);
    return t;
  });
}

int series_intrinsic_cap(const SeriesSpec& spec) {
  const SymFunc& inner = cached_inner(normalized(spec));
  if (inner.is_zero()) return 0;
  if (auto c = as_scalar(inner)) {
    if (spec.family == Family::L && c->get_den() == 1 && *c >= 0)
      return static_cast<int>(c->get_num().get_si());
    return -1;
  }
  return -1;
}

int series_skew_cap(const SeriesSpec& spec, int operand_degree) {
  const int intrinsic = series_intrinsic_cap(spec);
  if (operand_degree < 0) return 0;
  const int d = spec.inner_degree();
  if (d <= 0) return intrinsic;
  const int by_degree = operand_degree / d;
  return intrinsic < 0 ? by_degree : std::min(intrinsic, by_degree);
}

std::map<int, SymFunc> series_perp_apply(const SeriesSpec& spec, const SymFunc& f,
                                         int degree_budget) {
  std::map<int, SymFunc> out;
  if (f.is_zero()) return out;
  const int cap = series_skew_cap(spec, f.max_degree());
  if (cap < 0)
    throw std::domain_error("series_perp_apply: scalar M series " + spec.to_string() +
                            " does not terminate");
  for (int r = 0; r <= cap; ++r) {
    SymFunc g = skew(f, series_term(spec, r, degree_budget));
    if (!g.is_zero()) out.emplace(r, std::move(g));
  }
  return out;
}

SymFunc series_perp_at_one(const SeriesSpec& spec, const SymFunc& f, int degree_budget) {
  SymFunc total;
  for (auto& [r, g] : series_perp_apply(spec, f, degree_budget)) total += g;
  return total;
}

namespace {

void require_nonempty(const Partition& pi, const char* who) {
  if (pi.empty())
    throw DegenerateShape(std::string(who) + ": pi = [] is degenerate (L_(0)(1) = 0)");
}

/// Degree-graded pieces of a Z-side series at z = 1: result[d] is the part of
/// degree d, for d <= max_degree.
std::vector<SymFunc> graded_series(const SeriesSpec& spec, int max_degree) {
  std::vector<SymFunc> out(static_cast<std::size_t>(max_degree) + 1);
  const int d = spec.inner_degree();
  if (d <= 0) throw DegenerateShape("graded_series: scalar series " + spec.to_string());
  for (int r = 0; r * d <= max_degree; ++r)
    out[static_cast<std::size_t>(r * d)] += series_term(spec, r, std::max(max_degree, kDefaultDegreeBudget));
  return out;
}

/// [s_lambda(Z)] K(X,Z) F(Z) where K is M(XZ) = sum s_mu(X) s_mu(Z) or, with
/// `dual_kernel`, L(XZ) = sum (-1)^{|mu|} s_mu(X) s_{mu'}(Z).
SymFunc two_alphabet_coefficient(bool dual_kernel, const std::vector<SymFunc>& z_series,
                                 const Partition& lambda) {
  const int n = lambda.weight();
  const SymFunc target = schur(lambda);
  SymFunc result;
  for (int k = 0; k <= n; ++k) {
    const SymFunc& fz = z_series[static_cast<std::size_t>(n - k)];
    if (fz.is_zero()) continue;
    for (const auto& mu : partitions_of(k)) {
      const Partition z_shape = dual_kernel ? mu.conjugate() : mu;
      Rational c = inner(schur(z_shape) * fz, target);
      if (c == 0) continue;
      if (dual_kernel && k % 2) c = -c;
      result.add(mu, c);
    }
  }
  return result;
}

}  // namespace

SymFunc pi_schur(const Partition& pi, const Partition& lambda) {
  require_nonempty(pi, "pi_schur");
  return series_perp_at_one(SeriesSpec(Family::L, pi), schur(lambda),
                            std::max(lambda.weight(), kDefaultDegreeBudget));
}

SymFunc pi_branch(const Partition& pi, const Partition& lambda) {
  require_nonempty(pi, "pi_branch");
  return series_perp_at_one(SeriesSpec(Family::M, pi), schur(lambda),
                            std::max(lambda.weight(), kDefaultDegreeBudget));
}

SymFunc dual_pi_schur(const Partition& pi, const Partition& lambda) {
  require_nonempty(pi, "dual_pi_schur");
  SymFunc out = pi_schur(pi, lambda.conjugate());
  if (lambda.weight() % 2) out *= Rational(-1);
  return out;
}

SymFunc cauchy_pi_schur(const Partition& pi, const Partition& lambda) {
  require_nonempty(pi, "cauchy_pi_schur");
  return two_alphabet_coefficient(
      false, graded_series(SeriesSpec(Family::L, pi), lambda.weight()), lambda);
}

SymFunc cauchy_dual_pi_schur(const Partition& pi, const Partition& lambda) {
  require_nonempty(pi, "cauchy_dual_pi_schur");
  const Family f = pi.weight() % 2 == 0 ? Family::L : Family::M;
  return two_alphabet_coefficient(
      true, graded_series(SeriesSpec(f, pi.conjugate()), lambda.weight()), lambda);
}

Rational l_coefficient(const Partition& pi, const Partition& nu) {
  if (pi.empty()) throw DegenerateShape("l_coefficient: pi = []");
  if (nu.weight() % pi.weight()) return 0;
  return series_term(SeriesSpec(Family::L, pi), nu.weight() / pi.weight(),
                     std::max(nu.weight(), kDefaultDegreeBudget))
      .coeff(nu);
}

Rational m_coefficient(const Partition& pi, const Partition& nu) {
  if (pi.empty()) throw DegenerateShape("m_coefficient: pi = []");
  if (nu.weight() % pi.weight()) return 0;
  return series_term(SeriesSpec(Family::M, pi), nu.weight() / pi.weight(),
                     std::max(nu.weight(), kDefaultDegreeBudget))
      .coeff(nu);
}

}  // namespace pvo
