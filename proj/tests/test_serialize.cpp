#include <catch_amalgamated.hpp>

#include "pvo/serialize.hpp"

using namespace pvo;

TEST_CASE("SymFunc JSON") {
  const SymFunc f = schur({2}) - SymFunc::one() + Rational(3, 4) * schur({1, 1});
  const Json j = symfunc_to_json(f);
  CHECK(dump(j) ==
        R"([{"den":"1","num":"1","partition":[2]},{"den":"4","num":"3","partition":[1,1]},)"
        R"({"den":"1","num":"-1","partition":[]}])");
  CHECK(symfunc_from_json(j) == f);
  CHECK(dump(symfunc_to_json(SymFunc{})) == "[]");

  // big integers travel as strings
  SymFunc big;
  Rational q(mpz_class("123456789012345678901234567891"), mpz_class(7));
  q.canonicalize();
  big.add({3}, q);
  CHECK(symfunc_from_json(Json::parse(dump(symfunc_to_json(big)))) == big);

  // non-canonical input is normalized
  CHECK(symfunc_from_json(Json::parse(R"([{"partition":[1],"num":"2","den":"4"}])")) == Rational(1, 2) * schur({1}));
}

TEST_CASE("malformed SymFunc JSON") {
  CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"({"partition":[1]})")), std::invalid_argument);
  CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"([{"partition":[1],"num":"1","den":"0"}])")),
                  std::invalid_argument);
  CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"([{"partition":[1,2],"num":"1","den":"1"}])")),
                  std::invalid_argument);
  CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"([{"partition":[1],"num":1,"den":"1"}])")),
                  std::invalid_argument);
  CHECK_THROWS_AS(symfunc_from_json(Json::parse(R"([{"partition":[1],"num":"x","den":"1"}])")),
                  std::invalid_argument);
}

TEST_CASE("ChargedState JSON") {
  ChargedState s = ChargedState::pure(-1, schur({2, 1}));
  s.add(2, SymFunc::one());
  const Json j = state_to_json(s);
  CHECK(dump(j) ==
        R"({"sectors":[{"charge":-1,"value":[{"den":"1","num":"1","partition":[2,1]}]},)"
        R"({"charge":2,"value":[{"den":"1","num":"1","partition":[]}]}]})");
  CHECK(state_from_json(j) == s);
  CHECK(state_from_json(state_to_json(ChargedState{})) == ChargedState{});
  CHECK_THROWS_AS(state_from_json(Json::parse(R"({"sectors":[{"charge":"1","value":[]}]})")), std::invalid_argument);
}

TEST_CASE("Laurent map JSON") {
  LaurentMap m;
  m.vars = {"z", "w"};
  m.coeffs[{1, -2}] = schur({1});
  m.coeffs[{0, 0}] = SymFunc::one();
  const Json j = laurent_to_json(m);
  CHECK(j["vars"] == Json::array({"z", "w"}));
  CHECK(laurent_from_json(j) == m);
  CHECK_THROWS_AS(laurent_from_json(Json::parse(R"({"vars":["z"],"coeffs":[{"exp":[1,2],"value":[]}]})")),
                  std::invalid_argument);

  ChargedLaurent c;
  c.vars = {"z"};
  c.coeffs[{3}] = ChargedState::pure(1, schur({3}));
  CHECK(charged_laurent_from_json(charged_laurent_to_json(c)) == c);
}

TEST_CASE("report JSON") {
  VerificationReport r;
  r.suite = "clifford";
  r.config = {{"modes", {-1, 1}}};
  r.cases_run = 12;
  r.failures.push_back({{{"m", 1}}, symfunc_to_json(schur({1})), symfunc_to_json(SymFunc{})});
  r.elapsed_ms = 5;
  const Json j = report_to_json(r);
  CHECK(j.contains("suite"));
  CHECK(j.contains("config"));
  CHECK(j.contains("cases_run"));
  CHECK(j.contains("failures"));
  CHECK(j.contains("elapsed_ms"));
  CHECK(report_from_json(Json::parse(dump(j))) == r);
  CHECK_THROWS_AS(report_from_json(Json::parse(R"({"suite":"x"})")), std::invalid_argument);
}
