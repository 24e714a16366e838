#include <catch_amalgamated.hpp>

#include "pvo/serialize.hpp"
#include "pvo/verifier.hpp"

using namespace pvo;

TEST_CASE("reordering") {
  ReorderingConfig cfg;
  cfg.cases = {ReorderCase::LM};
  cfg.pis = {Partition{2}};
  cfg.z_range = cfg.w_range = {0, 3};
  cfg.test_degree = 4;
  const auto r = verify_reordering(cfg);
  CHECK(r.passed());
  CHECK(r.cases_run > 0);

  cfg.perturb = true;
  CHECK_FALSE(verify_reordering(cfg).passed());

  ReorderingConfig empty;
  empty.cases = {ReorderCase::MM};
  empty.pis = {Partition{2, 1}};
  empty.z_range = {1, 0};
  CHECK(verify_reordering(empty).passed());

  ReorderingConfig all;
  all.max_pi_weight = 3;
  all.z_range = all.w_range = {0, 3};
  all.test_degree = 3;
  CHECK(verify_reordering(all).passed());

  ReorderingConfig bad;
  bad.pis = {Partition{}};
  CHECK_THROWS_AS(verify_reordering(bad), std::invalid_argument);
}

TEST_CASE("zero modes") {
  CHECK(verify_zero_modes({}).passed());
  CHECK(verify_zero_modes({{0, 0}, false}).passed());
  CHECK(verify_zero_modes({{1, 0}, false}).passed());
  CHECK_FALSE(verify_zero_modes({{-3, 3}, true}).passed());
}

TEST_CASE("Clifford relations") {
  CliffordConfig cfg;
  cfg.pis = {Partition{2}, Partition{}};
  cfg.modes = {-2, 2};
  cfg.degree_bound = 4;
  CHECK(verify_clifford(cfg).passed());
  cfg.perturb = true;
  CHECK_FALSE(verify_clifford(cfg).passed());
}

TEST_CASE("multi-vertex normal ordering") {
  MultivertexConfig cfg;
  cfg.pis = {Partition{2, 1}};
  cfg.lengths = {2};
  cfg.inputs = {Partition{}};
  CHECK(verify_multivertex(cfg).passed());

  cfg.pis = {Partition{2}};
  cfg.lengths = {3};
  cfg.mixed = false;
  cfg.inputs = {Partition{1}};
  CHECK(verify_multivertex(cfg).passed());

  cfg.lengths = {1};
  CHECK(verify_multivertex(cfg).passed());

  cfg.lengths = {2};
  cfg.perturb = true;
  CHECK_FALSE(verify_multivertex(cfg).passed());
}

TEST_CASE("four routes to pi-Schur functions") {
  Theorem2Config cfg;
  cfg.pis = {Partition{2}, Partition{1, 1}};
  cfg.max_weight = 5;
  const auto r = verify_theorem2(cfg);
  CHECK(r.passed());
  cfg.perturb = true;
  CHECK_FALSE(verify_theorem2(cfg).passed());
}

TEST_CASE("inverse series and the diagonal collapse") {
  InverseSeriesConfig cfg;
  cfg.max_degree = 8;
  cfg.max_pi_weight = 3;
  cfg.max_z_weight = 8;
  cfg.operator_degree = 3;
  CHECK(verify_inverse_series(cfg).passed());
  cfg.perturb = true;
  CHECK_FALSE(verify_inverse_series(cfg).passed());
}

TEST_CASE("reports do not depend on the number of workers") {
  CliffordConfig cfg;
  cfg.pis = {Partition{1, 1}};
  cfg.modes = {-2, 2};
  cfg.degree_bound = 3;
  cfg.perturb = true;  // failures exercise the merge order too
  const auto a = verify_clifford(cfg, {1, false});
  const auto b = verify_clifford(cfg, {4, false});
  CHECK(dump(report_to_json(a)) == dump(report_to_json(b)));
  CHECK(a.elapsed_ms == 0);
}

TEST_CASE("failure records replay") {
  ZeroModesConfig cfg;
  cfg.charges = {0, 0};
  cfg.perturb = true;
  const auto r = verify_zero_modes(cfg);
  REQUIRE_FALSE(r.passed());
  const auto& f = r.failures.back();
  CHECK(f.inputs.at("identity") == "X(z)X(w)");
  CHECK(f.inputs.at("charge") == 0);
  CHECK(f.lhs.at("exp") == Json::array({1, 0}));
  CHECK(to_text(r).find("FAIL") != std::string::npos);
}
