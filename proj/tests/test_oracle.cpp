#include <catch_amalgamated.hpp>

#include "pvo/oracle.hpp"
#include "pvo/plethysm.hpp"

using namespace pvo;
using namespace pvo::oracle;

namespace {

std::vector<Partition> up_to(int n, int from = 0) {
  std::vector<Partition> out;
  for (int k = from; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("Schur polynomials from tableaux") {
  MultiPoly x1_plus_x2(2);
  x1_plus_x2.add({1, 0}, 1);
  x1_plus_x2.add({0, 1}, 1);
  CHECK(schur_poly({1}, 2) == x1_plus_x2);

  MultiPoly two_one(2);
  two_one.add({2, 1}, 1);
  two_one.add({1, 2}, 1);
  CHECK(schur_poly({2, 1}, 2) == two_one);

  CHECK(schur_poly({1, 1, 1}, 2).is_zero());
  CHECK(schur_poly({}, 3) == MultiPoly::constant(3, 1));
  CHECK(schur_poly({2, 1}, 3).coeff({1, 1, 1}) == 2);
  CHECK_THROWS_AS(schur_poly({1}, 0), std::invalid_argument);
}

TEST_CASE("decomposition peels dominant monomials") {
  for (const auto& lambda : up_to(4)) CHECK(decompose(schur_poly(lambda, 4), 4) == schur(lambda));
  CHECK(decompose(schur_poly({1}, 2) * schur_poly({1}, 2), 2) == schur({2}) + schur({1, 1}));
  CHECK(decompose(MultiPoly(3), 3).is_zero());
  CHECK_THROWS_AS(decompose(MultiPoly::monomial({1, 0}), 2), std::invalid_argument);
}

TEST_CASE("Kostka numbers") {
  CHECK(kostka({2, 1}, {1, 1, 1}) == 2);
  CHECK(kostka({3}, {1, 1, 1}) == 1);
  CHECK(kostka({1, 1, 1}, {3}) == 0);
  CHECK(kostka({2, 2}, {2, 1, 1}) == 1);
  CHECK(kostka({3, 2}, {1, 1, 1, 1, 1}) == 5);
  // content order does not matter
  CHECK(kostka({3, 1}, {1, 2, 1}) == kostka({3, 1}, {2, 1, 1}));
}

TEST_CASE("dominant-monomial arithmetic matches full polynomials") {
  for (const auto& a : up_to(3))
    for (const auto& b : up_to(3)) {
      const int n = 4;
      const SymFunc full = decompose(schur_poly(a, n) * schur_poly(b, n), n);
      CHECK(decompose(dominant_product(dominant_schur(a, n), dominant_schur(b, n))) == full);
    }
}

TEST_CASE("oracle products agree with the LR rule") {
  for (const auto& mu : up_to(6))
    for (const auto& nu : up_to(6 - mu.weight())) CHECK(oracle_product(mu, nu) == schur(mu) * schur(nu));
}

TEST_CASE("oracle plethysm") {
  CHECK(oracle_plethysm({2}, {2}, 4) == schur({4}) + schur({2, 2}));
  CHECK(oracle_plethysm({1, 1}, {2}, 4) == schur({3, 1}));
  for (const auto& nu : up_to(4)) CHECK(oracle_plethysm({1}, nu) == schur(nu));
  CHECK(oracle_plethysm({3}, {2}) == schur({6}) + schur({4, 2}) + schur({2, 2, 2}));
  CHECK_THROWS_AS(oracle_plethysm({2}, {2}, 3), std::invalid_argument);
  for (const auto& mu : up_to(6, 1))
    for (const auto& nu : up_to(6, 1))
      if (mu.weight() * nu.weight() <= 6) CHECK(oracle_plethysm(mu, nu) == plethysm(schur(mu), schur(nu)));
}

TEST_CASE("oracle pi-Schur functions") {
  CHECK(oracle_pi_schur({2}, {2}, 3) == schur({2}) - SymFunc::one());
  CHECK(oracle_pi_schur({1, 1}, {1, 1}, 3) == schur({1, 1}) - SymFunc::one());
  for (const auto& pi : up_to(3, 1)) CHECK(oracle_pi_schur(pi, {}) == SymFunc::one());
  CHECK(oracle_dual_pi_schur({3}, {1}) == -schur({1}));
  CHECK_THROWS_AS(oracle_pi_schur({2}, {2, 1}, 2), std::invalid_argument);
  // frozen oracle values
  CHECK(oracle_pi_schur({2}, {4}) == schur({4}) - schur({2}));
  CHECK(oracle_pi_schur({2}, {2, 2}) == schur({2, 2}) - schur({2}));
  CHECK(oracle_pi_schur({1, 1}, {2, 1, 1}) == schur({2, 1, 1}) - schur({2}) - schur({1, 1}) + SymFunc::one());
  CHECK(oracle_dual_pi_schur({2}, {1, 1, 1}) == -schur({3}) + schur({1}));
}
