#include <catch_amalgamated.hpp>

#include "pvo/plethysm.hpp"

using namespace pvo;

namespace {

std::vector<Partition> up_to(int n, int from = 0) {
  std::vector<Partition> out;
  for (int k = from; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("plethysm examples") {
  for (const auto& g : up_to(4)) CHECK(plethysm(schur({1}), schur(g)) == schur(g));
  CHECK(plethysm(schur({2}), schur({2})) == schur({4}) + schur({2, 2}));
  CHECK(plethysm(schur({1, 1}), schur({2})) == schur({3, 1}));
  CHECK(plethysm(schur({2}), schur({1, 1})) == schur({2, 2}) + schur({1, 1, 1, 1}));
  CHECK(plethysm(schur({3}), SymFunc::constant(2)) == SymFunc::constant(4));
  CHECK(plethysm(schur({1, 1}), SymFunc::one()).is_zero());
}

TEST_CASE("plethysm respects its degree budget") {
  CHECK_THROWS_AS(plethysm(schur({5}), schur({3})), BudgetExceeded);
  CHECK_NOTHROW(plethysm(schur({2}), schur({3}), 6));
  CHECK_THROWS_AS(plethysm(schur({2}), schur({3}), 5), BudgetExceeded);
}

TEST_CASE("Littlewood's conjugate plethysm theorem") {
  for (const auto& mu : up_to(8, 1))
    for (const auto& nu : up_to(8, 1)) {
      if (mu.weight() * nu.weight() > 8) continue;
      const SymFunc lhs = omega(plethysm(schur(mu), schur(nu)));
      const Partition outer = nu.weight() % 2 ? mu.conjugate() : mu;
      CHECK(lhs == plethysm(schur(outer), schur(nu.conjugate())));
    }
}

TEST_CASE("one-row and one-column constituents of a plethysm") {
  for (const auto& rho : up_to(10, 1))
    for (const auto& xi : up_to(10, 1)) {
      const int n = rho.weight() * xi.weight();
      if (n > 10) continue;
      const SymFunc p = plethysm(schur(rho), schur(xi));
      const bool row = rho.length() == 1 && xi.length() == 1;
      CHECK(p.coeff(Partition::row(n)) == (row ? 1 : 0));
      const int k = xi.weight();
      const bool column = xi == Partition::column(k) &&
                          ((rho.length() == 1 && k % 2 == 0) || (rho == Partition::column(rho.weight()) && k % 2 == 1));
      CHECK(p.coeff(Partition::column(n)) == (column ? 1 : 0));
    }
}

TEST_CASE("skewing a row by a plethysm") {
  for (int m = 1; m <= 8; ++m)
    for (const auto& rho : up_to(m, 1))
      for (const auto& xi : up_to(m, 1)) {
        const int kr = rho.weight() * xi.weight();
        if (kr > m) continue;
        const SymFunc got = skew(schur(Partition::row(m)), plethysm(schur(rho), schur(xi)));
        const bool rows = rho.length() == 1 && xi.length() == 1;
        CHECK(got == (rows ? schur(Partition::row(m - kr)) : SymFunc{}));
      }
}

TEST_CASE("series terms") {
  CHECK(series_term(SeriesSpec(Family::L, {}), 1) == SymFunc::constant(-1));
  CHECK(series_term(SeriesSpec(Family::L, {}), 2).is_zero());
  CHECK(series_term(SeriesSpec(Family::M, {}), 5) == SymFunc::one());
  CHECK(series_term(SeriesSpec(Family::M, {2}), 1) == schur({2}));
  CHECK(series_term(SeriesSpec(Family::M, {2}), 2) == schur({4}) + schur({2, 2}));
  CHECK(series_term(SeriesSpec(Family::L, {1}), 3) == -schur({1, 1, 1}));
  for (const auto& s : up_to(3)) {
    CHECK(series_term(SeriesSpec(Family::M, s), 0) == SymFunc::one());
    CHECK(series_term(SeriesSpec(Family::L, s), 0) == SymFunc::one());
  }
  // a removed shape that does not fit kills every positive grade
  const SeriesSpec dead(Family::M, {2}, {{3}});
  CHECK(dead.inner_degree() == -1);
  CHECK(series_term(dead, 0) == SymFunc::one());
  CHECK(series_term(dead, 1).is_zero());
  // skew shapes expand s_{pi/kappa} first
  CHECK(SeriesSpec(Family::L, {2, 1}, {{1}}).inner() == schur({2}) + schur({1, 1}));
  CHECK(SeriesSpec(Family::L, {3}, {{1}, {1}}).inner() == schur({1}));
}

TEST_CASE("series perp application") {
  auto graded = series_perp_apply(SeriesSpec(Family::L, {2}), schur({2}));
  CHECK(graded == std::map<int, SymFunc>{{0, schur({2})}, {1, -SymFunc::one()}});
  for (const auto& pi : up_to(3, 1))
    CHECK(series_perp_apply(SeriesSpec(Family::L, pi), SymFunc::one()) == std::map<int, SymFunc>{{0, SymFunc::one()}});
  graded = series_perp_apply(SeriesSpec(Family::M, {3}), schur({4}));
  CHECK(graded == std::map<int, SymFunc>{{0, schur({4})}, {1, schur({1})}});
}

TEST_CASE("M and L series are mutually inverse") {
  for (const auto& sigma : up_to(3, 1))
    for (int r = 1; r * sigma.weight() <= 9; ++r) {
      SymFunc acc;
      for (int a = 0; a <= r; ++a)
        acc += series_term(SeriesSpec(Family::M, sigma), a) * series_term(SeriesSpec(Family::L, sigma), r - a);
      CHECK(acc.is_zero());
    }
}

TEST_CASE("pi-Schur functions") {
  CHECK(pi_schur({2}, {2}) == schur({2}) - SymFunc::one());
  CHECK(pi_schur({3}, {4}) == schur({4}) - schur({1}));
  CHECK(pi_schur({1, 1}, {1, 1}) == schur({1, 1}) - SymFunc::one());
  CHECK(pi_branch({2}, {2}) == schur({2}) + SymFunc::one());
  CHECK(dual_pi_schur({2}, {1, 1}) == schur({2}) - SymFunc::one());
  CHECK(dual_pi_schur({3}, {1}) == -schur({1}));
  for (const auto& pi : up_to(4, 1)) {
    CHECK(pi_schur(pi, {}) == SymFunc::one());
    CHECK(pi_branch(pi, {}) == SymFunc::one());
    CHECK(dual_pi_schur(pi, {}) == SymFunc::one());
  }
  CHECK_THROWS_AS(pi_schur({}, {2}), DegenerateShape);
  CHECK_THROWS_AS(dual_pi_schur({}, {2}), DegenerateShape);
}

TEST_CASE("branching inverts the pi-Schur map") {
  for (const auto& pi : up_to(3, 1))
    for (const auto& lambda : up_to(7)) {
      const SymFunc s = pi_schur(pi, lambda);
      CHECK(series_perp_at_one(SeriesSpec(Family::M, pi), s) == schur(lambda));
    }
}

TEST_CASE("Cauchy routes agree with the perp routes") {
  CHECK(cauchy_pi_schur({2}, {2}) == schur({2}) - SymFunc::one());
  CHECK(cauchy_dual_pi_schur({3}, {1}) == -schur({1}));
  for (const auto& pi : up_to(3, 1)) CHECK(cauchy_pi_schur(pi, {}) == SymFunc::one());
  for (const auto& pi : up_to(3, 1))
    for (const auto& lambda : up_to(5)) {
      CHECK(cauchy_pi_schur(pi, lambda) == pi_schur(pi, lambda));
      CHECK(cauchy_dual_pi_schur(pi, lambda) == dual_pi_schur(pi, lambda));
    }
}

TEST_CASE("l and m coefficients under conjugation") {
  for (const auto& pi : up_to(3, 1))
    for (const auto& nu : up_to(9)) {
      if (pi.weight() % 2 == 0) {
        CHECK(l_coefficient(pi.conjugate(), nu.conjugate()) == l_coefficient(pi, nu));
      } else {
        const Rational sign = nu.weight() % 2 ? -1 : 1;
        CHECK(m_coefficient(pi.conjugate(), nu.conjugate()) == sign * l_coefficient(pi, nu));
      }
    }
}
