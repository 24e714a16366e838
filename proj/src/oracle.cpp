#include "pvo/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pvo/memo.hpp"

namespace pvo::oracle {

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly MultiPoly::constant(int n, const mpz_class& c) {
  MultiPoly p(n);
  p.add(Exponent(static_cast<std::size_t>(n), 0), c);
  return p;
}

MultiPoly MultiPoly::monomial(const Exponent& e, const mpz_class& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add(e, c);
  return p;
}

mpz_class MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

void MultiPoly::add(const Exponent& e, const mpz_class& c) {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("MultiPoly: exponent length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

MultiPoly MultiPoly::times_truncated(const MultiPoly& o, int d) const {
  if (o.n_ != n_) throw std::invalid_argument("MultiPoly: variable count mismatch");
  MultiPoly out(n_);
  Exponent e(static_cast<std::size_t>(n_));
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      int s = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = a[i] + b[i];
        s += e[i];
      }
      if (d >= 0 && s > d) continue;
      out.add(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const { return times_truncated(o, -1); }

MultiPoly MultiPoly::scaled(const mpz_class& k) const {
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_) out.add(e, c * k);
  return out;
}

MultiPoly MultiPoly::truncated(int d) const {
  MultiPoly out(n_);
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    if (s <= d) out.terms_.emplace(e, c);
  }
  return out;
}

bool MultiPoly::is_symmetric() const {
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      if (e[i] == e[i + 1]) continue;
      Exponent f = e;
      std::swap(f[i], f[i + 1]);
      if (coeff(f) != c) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Tableaux

namespace {

/// Calls visit(tableau entries row-major) for every SSYT of shape lambda with
/// entries in 1..n.
void for_each_ssyt(const Partition& lambda, int n,
                   const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(lambda.length()));
  for (int r = 0; r < lambda.length(); ++r)
    grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(lambda[static_cast<std::size_t>(r)]), 0);
  std::vector<int> flat(cells.size());
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    if (i == cells.size()) {
      visit(flat);
      return;
    }
    auto [r, c] = cells[i];
    const auto ur = static_cast<std::size_t>(r), uc = static_cast<std::size_t>(c);
    int lo = 1;
    if (c > 0) lo = std::max(lo, grid[ur][uc - 1]);
    if (r > 0) lo = std::max(lo, grid[ur - 1][uc] + 1);
    for (int v = lo; v <= n; ++v) {
      grid[ur][uc] = v;
      flat[i] = v;
      dfs(i + 1);
    }
    grid[ur][uc] = 0;
  };
  dfs(0);
}

Exponent content_of(const std::vector<int>& entries, int n) {
  Exponent e(static_cast<std::size_t>(n), 0);
  for (int v : entries) ++e[static_cast<std::size_t>(v - 1)];
  return e;
}

Partition sorted_partition(Exponent e) {
  std::sort(e.begin(), e.end(), std::greater<>());
  while (!e.empty() && e.back() == 0) e.pop_back();
  return Partition(std::move(e));
}

std::vector<Partition> dominant_support(int degree, int n) {
  return partitions_of(degree, n);
}

}  // namespace

MultiPoly schur_poly(const Partition& lambda, int n) {
  if (n < 1) throw std::invalid_argument("schur_poly: need n >= 1");
  MultiPoly p(n);
  if (lambda.length() > n) return p;
  for_each_ssyt(lambda, n, [&](const std::vector<int>& t) { p.add(content_of(t, n), 1); });
  return p;
}

SymFunc decompose(const MultiPoly& p, int n) {
  if (p.nvars() != n) throw std::invalid_argument("decompose: variable count mismatch");
  if (!p.is_symmetric()) throw std::invalid_argument("decompose: polynomial is not symmetric");
  SymFunc out;
  MultiPoly rest = p;
  for (std::size_t guard = 0; !rest.is_zero(); ++guard) {
    if (guard > 100000) throw std::logic_error("decompose: peeling did not terminate");
    const auto& [top, c] = *rest.terms().rbegin();
    const Partition lambda = sorted_partition(top);
    if (lambda.parts() != std::vector<int>(top.begin(), top.begin() + lambda.length()))
      throw std::logic_error("decompose: leading monomial is not dominant");
    const mpz_class k = c;
    out.add(lambda, Rational(k));
    rest -= schur_poly(lambda, n).scaled(k);
  }
  return out;
}

long kostka(const Partition& lambda, const Exponent& content) {
  int total = 0;
  for (int v : content) total += v;
  if (total != lambda.weight()) return 0;
  if (content.empty()) return lambda.empty() ? 1 : 0;
  static detail::Memo<std::pair<Partition, Exponent>, long> memo;
  std::pair<Partition, Exponent> key{lambda, content};
  if (auto hit = memo.find(key)) return *hit;

  // The largest entry fills a horizontal strip lambda/mu of size content.back().
  const int strip = content.back();
  Exponent head(content.begin(), content.end() - 1);
  long count = 0;
  std::vector<int> mu(lambda.parts());
  std::function<void(std::size_t, int)> choose = [&](std::size_t row, int left) {
    if (row == mu.size()) {
      if (left == 0) {
        std::vector<int> parts = mu;
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        count += kostka(Partition(std::move(parts)), head);
      }
      return;
    }
    const int full = lambda[row];
    const int floor_ = row + 1 < mu.size() ? lambda[row + 1] : 0;
    for (int take = 0; take <= std::min(left, full - floor_); ++take) {
      mu[row] = full - take;
      choose(row + 1, left - take);
    }
    mu[row] = full;
  };
  choose(0, strip);
  memo.insert(key, count);
  return count;
}

DominantPoly dominant_schur(const Partition& lambda, int n) {
  DominantPoly p{n, {}};
  if (lambda.length() > n) return p;
  for (const auto& kappa : dominant_support(lambda.weight(), n)) {
    Exponent content = kappa.parts();
    long k = kostka(lambda, content);
    if (k) p.coeffs.emplace(kappa, mpz_class(k));
  }
  return p;
}

DominantPoly dominant_product(const DominantPoly& a, const DominantPoly& b) {
  if (a.n != b.n) throw std::invalid_argument("dominant_product: variable count mismatch");
  const int n = a.n;
  std::map<int, std::vector<std::pair<Partition, mpz_class>>> by_degree_a, by_degree_b;
  for (const auto& [p, c] : a.coeffs) by_degree_a[p.weight()].emplace_back(p, c);
  for (const auto& [p, c] : b.coeffs) by_degree_b[p.weight()].emplace_back(p, c);
  auto lookup = [](const DominantPoly& q, const Partition& p) {
    auto it = q.coeffs.find(p);
    return it == q.coeffs.end() ? mpz_class(0) : it->second;
  };

  DominantPoly out{n, {}};
  for (const auto& [da, ta] : by_degree_a)
    for (const auto& [db, tb] : by_degree_b) {
      for (const auto& kappa : dominant_support(da + db, n)) {
        Exponent k(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < kappa.length(); ++i) k[static_cast<std::size_t>(i)] = kappa[static_cast<std::size_t>(i)];
        // [x^kappa](f g) = sum over alpha <= kappa of f[alpha] g[kappa - alpha].
        mpz_class acc = 0;
        Exponent alpha(static_cast<std::size_t>(n), 0);
        std::function<void(std::size_t, int)> walk = [&](std::size_t i, int left) {
          if (i == alpha.size()) {
            if (left != 0) return;
            Exponent beta(alpha.size());
            for (std::size_t j = 0; j < alpha.size(); ++j) beta[j] = k[j] - alpha[j];
            mpz_class fa = lookup(a, sorted_partition(alpha));
            if (fa == 0) return;
            acc += fa * lookup(b, sorted_partition(beta));
            return;
          }
          for (int v = 0; v <= std::min(k[i], left); ++v) {
            alpha[i] = v;
            walk(i + 1, left - v);
          }
          alpha[i] = 0;
        };
        walk(0, da);
        if (acc != 0) out.coeffs[kappa] += acc;
      }
    }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

SymFunc decompose(const DominantPoly& p) {
  SymFunc out;
  std::map<Partition, mpz_class> rest = p.coeffs;
  std::erase_if(rest, [](const auto& kv) { return kv.second == 0; });
  while (!rest.empty()) {
    const Partition top = rest.rbegin()->first;
    const mpz_class c = rest.rbegin()->second;
    out.add(top, Rational(c));
    for (const auto& kappa : dominant_support(top.weight(), p.n)) {
      long k = kostka(top, kappa.parts());
      if (!k) continue;
      auto& slot = rest[kappa];
      slot -= c * k;
      if (slot == 0) rest.erase(kappa);
    }
    if (rest.count(top)) throw std::logic_error("decompose: leading coefficient survived");
  }
  return out;
}

SymFunc oracle_product(const Partition& mu, const Partition& nu, int n) {
  if (n <= 0) n = std::max(1, mu.length() + nu.length());
  return decompose(dominant_product(dominant_schur(mu, n), dominant_schur(nu, n)));
}

SymFunc oracle_plethysm(const Partition& outer, const Partition& inner, int n) {
  const int total = outer.weight() * inner.weight();
  if (n <= 0) n = std::max(1, total);
  if (n < total) throw std::invalid_argument("oracle_plethysm: need n >= |outer| * |inner|");

  // The new alphabet: one letter per tableau of shape inner.
  std::vector<Exponent> letters;
  if (inner.length() <= n)
    for_each_ssyt(inner, n, [&](const std::vector<int>& t) { letters.push_back(content_of(t, n)); });

  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < outer.length(); ++r)
    for (int c = 0; c < outer[static_cast<std::size_t>(r)]; ++c) cells.emplace_back(r, c);

  DominantPoly result{n, {}};
  for (const auto& kappa : dominant_support(total, n)) {
    Exponent left(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < kappa.length(); ++i) left[static_cast<std::size_t>(i)] = kappa[static_cast<std::size_t>(i)];
    std::vector<int> usable;
    for (std::size_t j = 0; j < letters.size(); ++j) {
      bool fits = true;
      for (std::size_t i = 0; i < left.size() && fits; ++i) fits = letters[j][i] <= left[i];
      if (fits) usable.push_back(static_cast<int>(j));
    }
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(outer.length()));
    for (int r = 0; r < outer.length(); ++r)
      grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer[static_cast<std::size_t>(r)]), -1);
    long count = 0;
    std::function<void(std::size_t)> dfs = [&](std::size_t i) {
      if (i == cells.size()) {
        if (std::all_of(left.begin(), left.end(), [](int v) { return v == 0; })) ++count;
        return;
      }
      auto [r, c] = cells[i];
      const auto ur = static_cast<std::size_t>(r), uc = static_cast<std::size_t>(c);
      int lo = 0;
      if (c > 0) lo = std::max(lo, grid[ur][uc - 1]);
      if (r > 0) lo = std::max(lo, grid[ur - 1][uc] + 1);
      for (int j : usable) {
        if (j < lo) continue;
        const Exponent& y = letters[static_cast<std::size_t>(j)];
        bool fits = true;
        for (std::size_t q = 0; q < y.size() && fits; ++q) fits = y[q] <= left[q];
        if (!fits) continue;
        for (std::size_t q = 0; q < y.size(); ++q) left[q] -= y[q];
        grid[ur][uc] = j;
        dfs(i + 1);
        for (std::size_t q = 0; q < y.size(); ++q) left[q] += y[q];
      }
      grid[ur][uc] = -1;
    };
    dfs(0);
    if (count) result.coeffs.emplace(kappa, mpz_class(count));
  }
  return decompose(result);
}

namespace {

/// prod_T (1 - Z^T) or prod_T 1/(1 - Z^T) over SSYT T of shape sigma in n
/// letters, truncated at degree d.
MultiPoly tableau_product(const Partition& sigma, int n, int d, bool inverse) {
  MultiPoly acc = MultiPoly::constant(n, 1);
  if (sigma.length() > n) return acc;
  const int w = sigma.weight();
  for_each_ssyt(sigma, n, [&](const std::vector<int>& t) {
    if (w > d) return;
    Exponent e = content_of(t, n);
    MultiPoly factor = MultiPoly::constant(n, 1);
    if (inverse) {
      Exponent pw(e.size(), 0);
      for (int k = 1; k * w <= d; ++k) {
        for (std::size_t i = 0; i < e.size(); ++i) pw[i] += e[i];
        factor.add(pw, 1);
      }
    } else {
      factor.add(e, -1);
    }
    acc = acc.times_truncated(factor, d);
  });
  return acc;
}

MultiPoly homogeneous_part(const MultiPoly& p, int d) {
  MultiPoly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    int s = 0;
    for (int v : e) s += v;
    if (s == d) out.add(e, c);
  }
  return out;
}

SymFunc two_alphabet(const MultiPoly& z_series, const Partition& lambda, int n, bool dual) {
  const int d = lambda.weight();
  SymFunc out;
  for (int k = 0; k <= d; ++k)
    for (const auto& mu : partitions_of(k)) {
      const Partition z_shape = dual ? mu.conjugate() : mu;
      if (z_shape.length() > n) continue;
      MultiPoly prod = homogeneous_part(schur_poly(z_shape, n).times_truncated(z_series, d), d);
      if (prod.is_zero()) continue;
      Rational c = decompose(prod, n).coeff(lambda);
      if (c == 0) continue;
      if (dual && k % 2) c = -c;
      out.add(mu, c);
    }
  return out;
}

}  // namespace

SymFunc oracle_pi_schur(const Partition& pi, const Partition& lambda, int n) {
  if (n <= 0) n = std::max(1, lambda.weight());
  if (n < lambda.weight()) throw std::invalid_argument("oracle_pi_schur: need n >= |lambda|");
  return two_alphabet(tableau_product(pi, n, lambda.weight(), false), lambda, n, false);
}

SymFunc oracle_dual_pi_schur(const Partition& pi, const Partition& lambda, int n) {
  if (n <= 0) n = std::max(1, lambda.weight());
  if (n < lambda.weight()) throw std::invalid_argument("oracle_dual_pi_schur: need n >= |lambda|");
  const bool even = pi.weight() % 2 == 0;
  return two_alphabet(tableau_product(pi.conjugate(), n, lambda.weight(), !even), lambda, n, true);
}

}  // namespace pvo::oracle
