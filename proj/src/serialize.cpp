#include "pvo/serialize.hpp"

#include <stdexcept>

namespace pvo {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key '") + key + "'");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

mpz_class as_bigint(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a decimal string");
  mpz_class z;
  if (z.set_str(j.get<std::string>(), 10) != 0) bad(std::string(what) + " is not a decimal integer");
  return z;
}

std::vector<int> int_vector(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> v;
  for (const auto& x : j) v.push_back(as_int(x, what));
  return v;
}

}  // namespace

Json partition_to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const Json& j) {
  std::vector<int> parts = int_vector(j, "partition");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) bad("partition parts must be positive");
    if (i && parts[i] > parts[i - 1]) bad("partition parts must be weakly decreasing");
  }
  return Partition(std::move(parts));
}

Json symfunc_to_json(const SymFunc& f) {
  Json a = Json::array();
  for (const auto& [p, c] : f) {
    Rational q = c;
    q.canonicalize();
    a.push_back({{"partition", partition_to_json(p)},
                 {"num", q.get_num().get_str()},
                 {"den", q.get_den().get_str()}});
  }
  return a;
}

SymFunc symfunc_from_json(const Json& j) {
  if (!j.is_array()) bad("symmetric function must be an array");
  SymFunc f;
  for (const auto& t : j) {
    const mpz_class den = as_bigint(field(t, "den"), "den");
    if (den <= 0) bad("den must be positive");
    Rational q(as_bigint(field(t, "num"), "num"), den);
    q.canonicalize();
    f.add(partition_from_json(field(t, "partition")), q);
  }
  return f;
}

Json state_to_json(const ChargedState& s) {
  Json a = Json::array();
  for (const auto& [c, f] : s.sectors) a.push_back({{"charge", c}, {"value", symfunc_to_json(f)}});
  return {{"sectors", a}};
}

ChargedState state_from_json(const Json& j) {
  const Json& a = field(j, "sectors");
  if (!a.is_array()) bad("sectors must be an array");
  ChargedState s;
  for (const auto& t : a) s.add(as_int(field(t, "charge"), "charge"), symfunc_from_json(field(t, "value")));
  return s;
}

namespace {

template <class V, class ToJson>
Json laurent_json(const Laurent<V>& m, ToJson value) {
  Json coeffs = Json::array();
  for (const auto& [e, v] : m.coeffs) coeffs.push_back({{"exp", e}, {"value", value(v)}});
  return {{"vars", m.vars}, {"coeffs", coeffs}};
}

template <class V, class FromJson>
Laurent<V> laurent_parse(const Json& j, FromJson value) {
  Laurent<V> m;
  const Json& vars = field(j, "vars");
  if (!vars.is_array()) bad("vars must be an array");
  for (const auto& v : vars) {
    if (!v.is_string()) bad("variable names must be strings");
    m.vars.push_back(v.get<std::string>());
  }
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) bad("coeffs must be an array");
  for (const auto& t : coeffs) {
    auto e = int_vector(field(t, "exp"), "exp");
    if (e.size() != m.vars.size()) bad("exp length differs from vars");
    V v = value(field(t, "value"));
    if (v.is_zero()) continue;
    if (!m.coeffs.emplace(std::move(e), std::move(v)).second) bad("repeated exponent");
  }
  return m;
}

}  // namespace

Json laurent_to_json(const LaurentMap& m) { return laurent_json(m, symfunc_to_json); }
LaurentMap laurent_from_json(const Json& j) { return laurent_parse<SymFunc>(j, symfunc_from_json); }

Json charged_laurent_to_json(const ChargedLaurent& m) { return laurent_json(m, state_to_json); }
ChargedLaurent charged_laurent_from_json(const Json& j) {
  return laurent_parse<ChargedState>(j, state_from_json);
}

Json report_to_json(const VerificationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return {{"suite", r.suite},
          {"config", r.config},
          {"cases_run", r.cases_run},
          {"failures", failures},
          {"elapsed_ms", r.elapsed_ms}};
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  const Json& suite = field(j, "suite");
  if (!suite.is_string()) bad("suite must be a string");
  r.suite = suite.get<std::string>();
  r.config = field(j, "config");
  const Json& n = field(j, "cases_run");
  if (!n.is_number_integer()) bad("cases_run must be an integer");
  r.cases_run = n.get<long>();
  const Json& ms = field(j, "elapsed_ms");
  if (!ms.is_number_integer()) bad("elapsed_ms must be an integer");
  r.elapsed_ms = ms.get<long>();
  const Json& failures = field(j, "failures");
  if (!failures.is_array()) bad("failures must be an array");
  for (const auto& f : failures) r.failures.push_back({field(f, "inputs"), field(f, "lhs"), field(f, "rhs")});
  return r;
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace pvo
