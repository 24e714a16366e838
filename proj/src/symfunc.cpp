#include "pvo/symfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pvo/memo.hpp"

namespace pvo {

namespace {

template <class Tag>
std::string format(const SparseCombination<Tag>& f, const char* prefix) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : f) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += prefix + p.to_string();
    first = false;
  }
  return out;
}

const std::vector<Partition>& cached_partitions(int n) {
  static std::mutex guard;
  static std::map<int, std::vector<Partition>> stable;
  {
    std::lock_guard lock(guard);
    auto it = stable.find(n);
    if (it != stable.end()) return it->second;
  }
  auto parts = partitions_of(n);
  std::lock_guard lock(guard);
  return stable.try_emplace(n, std::move(parts)).first->second;
}

/// Depth-first enumeration of LR tableaux of a skew shape, filling cells in
/// reading order (rows top to bottom, each row right to left).
class LrTableaux {
 public:
  LrTableaux(const Partition& lambda, const Partition& mu) : lambda_(lambda), mu_(mu) {
    for (int r = 0; r < lambda.length(); ++r)
      for (int c = lambda[r] - 1; c >= mu[r]; --c) cells_.emplace_back(r, c);
    fill_.assign(static_cast<std::size_t>(lambda.length()),
                 std::vector<int>(static_cast<std::size_t>(lambda[0]), 0));
    content_.assign(static_cast<std::size_t>(lambda.length()) + 2, 0);
  }

  std::map<Partition, long, RevLex> run() {
    dfs(0);
    return std::move(out_);
  }

 private:
  void dfs(std::size_t idx) {
    if (idx == cells_.size()) {
      std::vector<int> nu;
      for (std::size_t v = 1; v < content_.size() && content_[v] > 0; ++v)
        nu.push_back(content_[v]);
      ++out_[Partition(std::move(nu))];
      return;
    }
    auto [r, c] = cells_[idx];
    const auto ur = static_cast<std::size_t>(r);
    const auto uc = static_cast<std::size_t>(c);
    int hi = r + 1;
    if (c + 1 < lambda_[ur]) hi = std::min(hi, fill_[ur][uc + 1]);
    int lo = 1;
    if (r > 0 && c >= mu_[ur - 1]) lo = fill_[ur - 1][uc] + 1;
    for (int v = lo; v <= hi; ++v) {
      const auto uv = static_cast<std::size_t>(v);
      if (v > 1 && content_[uv] + 1 > content_[uv - 1]) continue;
      fill_[ur][uc] = v;
      ++content_[uv];
      dfs(idx + 1);
      --content_[uv];
    }
    fill_[ur][uc] = 0;
  }

  const Partition& lambda_;
  const Partition& mu_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<int>> fill_;
  std::vector<int> content_;
  std::map<Partition, long, RevLex> out_;
};

using PartitionPair = std::pair<Partition, Partition>;

const SymFunc& schur_pair_product(const Partition& a, const Partition& b) {
  static std::mutex guard;
  static std::map<PartitionPair, SymFunc> table;
  const bool swap = b < a;
  PartitionPair key = swap ? PartitionPair{b, a} : PartitionPair{a, b};
  {
    std::lock_guard lock(guard);
    auto it = table.find(key);
    if (it != table.end()) return it->second;
  }
  const Partition& big = a.weight() >= b.weight() ? a : b;
  const Partition& small = a.weight() >= b.weight() ? b : a;
  SymFunc out;
  for (const auto& lambda : cached_partitions(a.weight() + b.weight())) {
    if (!lambda.contains(big) || !lambda.contains(small)) continue;
    const auto& skewed = lr_skew(lambda, big);
    auto it = skewed.find(small);
    if (it != skewed.end()) out.add(lambda, Rational(it->second));
  }
  std::lock_guard lock(guard);
  return table.try_emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

std::string to_string(const SymFunc& f) { return format(f, "s"); }
std::string to_string(const PowerExpr& f) { return format(f, "p_"); }
std::ostream& operator<<(std::ostream& os, const SymFunc& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const PowerExpr& f) {
  return os << to_string(f);
}

const std::map<Partition, long, RevLex>& lr_skew(const Partition& lambda,
                                                  const Partition& mu) {
  static std::mutex guard;
  static std::map<PartitionPair, std::map<Partition, long, RevLex>> table;
  PartitionPair key{lambda, mu};
  {
    std::lock_guard lock(guard);
    auto it = table.find(key);
    if (it != table.end()) return it->second;
  }
  std::map<Partition, long, RevLex> result;
  if (lambda.contains(mu)) result = LrTableaux(lambda, mu).run();
  std::lock_guard lock(guard);
  return table.try_emplace(std::move(key), std::move(result)).first->second;
}

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.weight() != mu.weight() + nu.weight()) return 0;
  const auto& s = lr_skew(lambda, mu);
  auto it = s.find(nu);
  return it == s.end() ? 0 : it->second;
}

SymFunc product(const SymFunc& f, const SymFunc& g) {
  SymFunc out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) {
      Rational k = ca * cb;
      for (const auto& [lambda, c] : schur_pair_product(a, b)) out.add(lambda, k * c);
    }
  return out;
}

SymFunc operator*(const SymFunc& f, const SymFunc& g) { return product(f, g); }

SymFunc skew(const SymFunc& f, const SymFunc& g) {
  SymFunc out;
  for (const auto& [mu, cg] : g)
    for (const auto& [lambda, cf] : f) {
      if (mu.weight() > lambda.weight()) continue;
      Rational k = cf * cg;
      for (const auto& [nu, c] : lr_skew(lambda, mu)) out.add(nu, k * c);
    }
  return out;
}

SymFunc skew_by_sequence(const Partition& pi, std::span<const Partition> removed) {
  SymFunc cur = schur(pi);
  for (const auto& k : removed) {
    if (k.empty()) continue;
    cur = skew(cur, schur(k));
    if (cur.is_zero()) break;
  }
  return cur;
}

Rational inner(const SymFunc& f, const SymFunc& g) {
  Rational acc = 0;
  for (const auto& [p, c] : f) acc += c * g.coeff(p);
  return acc;
}

Rational inner(const PowerExpr& f, const PowerExpr& g) {
  Rational acc = 0;
  for (const auto& [p, c] : f) acc += c * g.coeff(p) * Rational(static_cast<long>(z_lambda(p)));
  return acc;
}

SymFunc omega(const SymFunc& f) {
  SymFunc out;
  for (const auto& [p, c] : f) out.add(p.conjugate(), c);
  return out;
}

long multi_lr(const Partition& pi, std::span<const int> sizes, bool column_mode) {
  int total = 0;
  std::vector<Partition> removed;
  for (int s : sizes) {
    if (s < 0) throw std::invalid_argument("multi_lr: negative size");
    total += s;
    if (s > 0) removed.push_back(column_mode ? Partition::column(s) : Partition::row(s));
  }
  if (total != pi.weight()) return 0;
  SymFunc rest = skew_by_sequence(pi, removed);
  Rational c = rest.coeff(Partition{});
  return c.get_num().get_si();
}

PowerExpr product(const PowerExpr& f, const PowerExpr& g) {
  PowerExpr out;
  for (const auto& [a, ca] : f)
    for (const auto& [b, cb] : g) {
      std::vector<int> merged = a.parts();
      merged.insert(merged.end(), b.parts().begin(), b.parts().end());
      std::sort(merged.begin(), merged.end(), std::greater<>());
      out.add(Partition(std::move(merged)), ca * cb);
    }
  return out;
}

PowerExpr operator*(const PowerExpr& f, const PowerExpr& g) { return product(f, g); }

long long character(const Partition& lambda, const Partition& rho) {
  if (lambda.weight() != rho.weight())
    throw std::invalid_argument("character: weights differ");
  if (rho.empty()) return 1;
  static detail::Memo<PartitionPair, long long> memo;
  PartitionPair key{lambda, rho};
  if (auto hit = memo.find(key)) return *hit;

  const int k = rho[0];
  Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + len - 1 - i;

  long long total = 0;
  for (int i = 0; i < len; ++i) {
    int b = beta[static_cast<std::size_t>(i)];
    int target = b - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int other : beta)
      if (other > target && other < b) ++between;
    std::vector<int> nb = beta;
    nb[static_cast<std::size_t>(i)] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    std::vector<int> parts(static_cast<std::size_t>(len));
    for (int j = 0; j < len; ++j) parts[static_cast<std::size_t>(j)] = nb[static_cast<std::size_t>(j)] - (len - 1 - j);
    long long sub = character(Partition(std::move(parts)), rest);
    total += (between % 2 ? -sub : sub);
  }
  memo.insert(key, total);
  return total;
}

namespace {

const PowerExpr& schur_in_power_basis(const Partition& lambda) {
  static std::mutex guard;
  static std::map<Partition, PowerExpr> table;
  {
    std::lock_guard lock(guard);
    auto it = table.find(lambda);
    if (it != table.end()) return it->second;
  }
  PowerExpr out;
  for (const auto& rho : cached_partitions(lambda.weight())) {
    long long chi = character(lambda, rho);
    if (chi != 0) out.add(rho, Rational(static_cast<long>(chi)) / Rational(static_cast<long>(z_lambda(rho))));
  }
  std::lock_guard lock(guard);
  return table.try_emplace(lambda, std::move(out)).first->second;
}

const SymFunc& power_in_schur_basis(const Partition& rho) {
  static std::mutex guard;
  static std::map<Partition, SymFunc> table;
  {
    std::lock_guard lock(guard);
    auto it = table.find(rho);
    if (it != table.end()) return it->second;
  }
  SymFunc out;
  for (const auto& lambda : cached_partitions(rho.weight())) {
    long long chi = character(lambda, rho);
    if (chi != 0) out.add(lambda, Rational(static_cast<long>(chi)));
  }
  std::lock_guard lock(guard);
  return table.try_emplace(rho, std::move(out)).first->second;
}

}  // namespace

PowerExpr to_power_basis(const SymFunc& f) {
  PowerExpr out;
  for (const auto& [lambda, c] : f)
    for (const auto& [rho, k] : schur_in_power_basis(lambda)) out.add(rho, c * k);
  return out;
}

SymFunc from_power_basis(const PowerExpr& q) {
  SymFunc out;
  for (const auto& [rho, c] : q)
    for (const auto& [lambda, k] : power_in_schur_basis(rho)) out.add(lambda, c * k);
  return out;
}

}  // namespace pvo
