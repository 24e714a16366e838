#include <catch_amalgamated.hpp>

#include "pvo/plethysm.hpp"
#include "pvo/vertex.hpp"

using namespace pvo;

namespace {

std::vector<Partition> up_to(int n, int from = 0) {
  std::vector<Partition> out;
  for (int k = from; k <= n; ++k)
    for (auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

ChargedState ket(int c, const SymFunc& f) { return ChargedState::pure(c, f); }

}  // namespace

TEST_CASE("vertex operator factor lists") {
  CHECK(build_vertex({3}).to_string() ==
        "M(z) L^perp(z^-1) L^perp_[3]/[1](z) L^perp_[3]/[2](z^2) L^perp_[3]/[3](z^3)");
  CHECK(build_vertex({}).to_string() == "M(z) L^perp(z^-1)");
  CHECK(build_vertex({2, 1}).to_string() == "M(z) L^perp(z^-1) L^perp_[2,1]/[1](z) L^perp_[2,1]/[2](z^2)");
  CHECK(build_dual_vertex({3}).to_string() == "L(z) M^perp(z^-1) M^perp_[3]/[1](z)");
  CHECK(build_dual_vertex({}).to_string() == "L(z) M^perp(z^-1)");
  CHECK(build_dual_vertex({1, 1}).to_string() == "L(z) M^perp(z^-1) M^perp_[1,1]/[1](z) L^perp_[1,1]/[1,1](z^2)");
  CHECK(full_vertex({}, ModeKind::X).to_string() == "M(z) L^perp(z^-1) e^{iq} z^{a0}");
}

TEST_CASE("window evaluation") {
  auto res = apply_factors(build_vertex({}), SymFunc::one(), {{0, 3}});
  REQUIRE(res.coeffs.size() == 4);
  for (int a = 0; a <= 3; ++a) CHECK(res.coeffs.at({a}) == schur(Partition::row(a)));

  res = apply_factors(build_vertex({3}), SymFunc::one(), {{3, 3}});
  CHECK(res.coeffs.at({3}) == schur({3}) - SymFunc::one());

  FactorChain identity;
  identity.vars = {"z"};
  auto st = apply_chain(identity, ket(2, schur({2, 1})), {{-2, 2}});
  REQUIRE(st.coeffs.size() == 1);
  CHECK(st.coeffs.at({0}) == ket(2, schur({2, 1})));

  CHECK(apply_factors(build_vertex({}), SymFunc::one(), {{3, 1}}).coeffs.empty());
  CHECK_THROWS_AS(apply_factors(build_vertex({}), SymFunc::one(), {{0, 1}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("enlarging the window leaves reported coefficients unchanged") {
  for (const auto& pi : {Partition{}, Partition{2}, Partition{2, 1}, Partition{1, 1, 1}})
    for (bool dual : {false, true}) {
      const FactorChain ch = dual ? build_dual_vertex(pi) : build_vertex(pi);
      for (const auto& lambda : up_to(3)) {
        const auto small = apply_factors(ch, schur(lambda), {{-2, 2}});
        const auto big = apply_factors(ch, schur(lambda), {{-4, 4}});
        for (int e = -2; e <= 2; ++e) {
          auto a = small.coeffs.find({e});
          auto b = big.coeffs.find({e});
          CHECK((a == small.coeffs.end()) == (b == big.coeffs.end()));
          if (a != small.coeffs.end() && b != big.coeffs.end()) CHECK(a->second == b->second);
        }
      }
    }
}

TEST_CASE("degree bookkeeping of a vertex operator") {
  // Every skew factor of V_pi removes |pi| boxes per unit of z it misses, so
  // the z^e coefficient on s[lambda] has degrees |lambda| + e - 3k for pi = [2,1].
  for (const auto& lambda : up_to(4)) {
    const auto res = apply_factors(build_vertex({2, 1}), schur(lambda), {{-3, 3}});
    for (const auto& [e, f] : res.coeffs)
      for (const auto& [p, c] : f) {
        const int missing = lambda.weight() + e[0] - p.weight();
        CHECK(missing >= 0);
        CHECK(missing % 3 == 0);
      }
  }
}

TEST_CASE("modes") {
  CHECK(mode({}, ModeKind::X, 0, ket(0, SymFunc::one())) == ket(1, SymFunc::one()));
  CHECK(mode({}, ModeKind::X, -2, ket(0, SymFunc::one())) == ket(1, schur({2})));
  CHECK(mode({}, ModeKind::X, 1, ket(0, SymFunc::one())).is_zero());
  CHECK(mode({}, ModeKind::Xstar, 1, ket(0, SymFunc::one())).is_zero());
}

TEST_CASE("anticommutators") {
  CHECK(anticommutator({3}, ModeKind::X, 1, {3}, ModeKind::Xstar, -1, ket(0, schur({1}))) == ket(0, schur({1})));
  CHECK(anticommutator({2}, ModeKind::X, 2, {2}, ModeKind::Xstar, -1, ket(0, schur({2}))).is_zero());
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n)
      CHECK(anticommutator({2}, ModeKind::X, m, {2}, ModeKind::X, n, ket(1, schur({1, 1}))).is_zero());
  CHECK_THROWS_AS(anticommutator({2}, ModeKind::X, 0, {1, 1}, ModeKind::Xstar, 0, ket(0, SymFunc::one())),
                  std::invalid_argument);
}

TEST_CASE("the charge-free convention breaks the Clifford relations") {
  bool broken = false;
  for (int m = -2; m <= 2 && !broken; ++m)
    for (int n = -2; n <= 2 && !broken; ++n)
      broken = !anticommutator({}, ModeKind::X, m, {}, ModeKind::X, n, ket(0, SymFunc::one()),
                               ModeConvention::ChargeFree)
                    .is_zero();
  CHECK(broken);
}

TEST_CASE("vertex strings") {
  CHECK(vertex_string({3}, {2, 1}, false) == schur({2, 1}));
  CHECK(vertex_string({2}, {1, 1}, true) == schur({2}) - SymFunc::one());
  CHECK(vertex_string({2}, {}, false) == SymFunc::one());
  for (const auto& lambda : up_to(5))
    if (lambda.length() <= 3) CHECK(vertex_string({}, lambda, false) == schur(lambda));
  CHECK_THROWS_AS(vertex_string({1}, {1, 1, 1}, false, 2), BudgetExceeded);
}

TEST_CASE("zero-mode normal forms") {
  const auto R = ZeroMode::raise();
  const auto L = ZeroMode::lower();
  auto A = ZeroMode::alpha;
  CHECK(zero_mode_normal_form({R, A(0, 1), R, A(1, 1)}, 2) == ZeroModeNormalForm{{-1, -2}, {1, 1}, 2});
  CHECK(zero_mode_normal_form({A(0, -1), L, A(1, -1), L}, 2) == ZeroModeNormalForm{{0, -1}, {-1, -1}, -2});
  CHECK(zero_mode_normal_form({}, 2) == ZeroModeNormalForm{{0, 0}, {0, 0}, 0});
  CHECK(act_zero_modes({R, A(0, 1), R, A(1, 1)}, 2, 0) == std::pair<int, std::vector<int>>{2, {1, 0}});
  for (int c = -3; c <= 3; ++c) {
    const std::vector<ZeroMode> s{A(1, -1), R, L, A(0, 1), R};
    CHECK(zero_mode_normal_form(s, 2).act(c) == act_zero_modes(s, 2, c));
  }
}

TEST_CASE("normal-ordered products") {
  const auto vv = normal_order_product({2}, {VertexKind::V, VertexKind::V}, {"z", "w"});
  CHECK(vv.prefactor == "(1 - w/z)");
  const auto sv = normal_order_product({2}, {VertexKind::Vstar, VertexKind::V}, {"z", "w"});
  CHECK(sv.prefactor == "(1 - w/z)^-1");
  const auto one = normal_order_product({2}, {VertexKind::V}, {"z"});
  CHECK(one.prefactor == "1");
  CHECK(one.chain == build_vertex({2}));
  CHECK_THROWS_AS(normal_order_product({2}, {VertexKind::V, VertexKind::Vstar, VertexKind::V}, {"a", "b", "c"}),
                  std::invalid_argument);

  for (const auto& pi : {Partition{2, 1}, Partition{1, 1}})
    for (const auto& kinds : std::vector<std::vector<VertexKind>>{{VertexKind::V, VertexKind::V},
                                                                   {VertexKind::V, VertexKind::Vstar},
                                                                   {VertexKind::Vstar, VertexKind::V}}) {
      const auto lhs = apply_factors(vertex_product(pi, kinds, {"z", "w"}), SymFunc::one(), {{-2, 2}, {-2, 2}});
      const auto rhs =
          apply_factors(normal_order_product(pi, kinds, {"z", "w"}).chain, SymFunc::one(), {{-2, 2}, {-2, 2}});
      CHECK(lhs == rhs);
    }
}

TEST_CASE("R(z,z) is the identity") {
  for (const auto& pi : up_to(3, 1))
    for (const auto& lambda : up_to(3)) {
      const auto res = apply_factors(diagonal_r_chain(pi), schur(lambda), {{-2, 2}});
      REQUIRE(res.coeffs.size() == 1);
      CHECK(res.coeffs.at({0}) == schur(lambda));
    }
}

TEST_CASE("composition merges variables by name") {
  const FactorChain ab = compose(build_vertex({1}, "a"), build_vertex({1}, "b"));
  CHECK(ab.vars == std::vector<std::string>{"a", "b"});
  CHECK(ab.factors.size() == build_vertex({1}).factors.size() * 2);
  CHECK(rebase(build_vertex({1}, "b"), {"a", "b"}).factors.front().exps == std::vector<int>{0, 1});
  CHECK_THROWS(compose(full_vertex({1}, ModeKind::X, "a"), build_vertex({1}, "b")));
}
