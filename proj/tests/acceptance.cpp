// End-to-end acceptance run: one PASS/FAIL line per criterion. Every
// comparison is exact equality; there is no tolerance anywhere.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "pvo/oracle.hpp"
#include "pvo/plethysm.hpp"
#include "pvo/serialize.hpp"
#include "pvo/verifier.hpp"
#include "pvo/vertex.hpp"

using namespace pvo;

namespace {

std::vector<Partition> up_to(int n, int from = 0, int max_length = -1) {
  std::vector<Partition> out;
  for (int k = from; k <= n; ++k)
    for (auto& p : max_length >= 0 ? partitions_of(k, max_length) : partitions_of(k)) out.push_back(p);
  return out;
}

std::string note;  // detail for the current criterion's line

bool suite_passes(const VerificationReport& r) {
  note = std::to_string(r.cases_run) + " checks, " + std::to_string(r.failures.size()) + " failures";
  if (!r.passed()) note += "; first at " + dump(r.failures.front().inputs);
  return r.passed() && r.cases_run > 0;
}

bool clifford() { return suite_passes(verify_clifford({})); }

bool reordering() { return suite_passes(verify_reordering({})); }

bool zero_modes() { return suite_passes(verify_zero_modes({})); }

bool multivertex() { return suite_passes(verify_multivertex({})); }

bool theorem2() { return suite_passes(verify_theorem2({})); }

bool classical() {
  long n = 0, bad = 0;
  for (const auto& lambda : up_to(6, 0, 3)) {
    ++n;
    if (!(vertex_string({}, lambda, false) == schur(lambda))) ++bad;
    const Rational sign = lambda.weight() % 2 ? -1 : 1;
    ++n;
    if (!(vertex_string({}, lambda, true) == sign * schur(lambda.conjugate()))) ++bad;
  }
  note = std::to_string(n) + " strings, " + std::to_string(bad) + " mismatches";
  return bad == 0;
}

bool inverse_series() { return suite_passes(verify_inverse_series({})); }

bool oracle_equivalence() {
  long products = 0, plethysms = 0, pis = 0, bad = 0;
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; a + b <= 10; ++b)
      for (const auto& mu : partitions_of(a))
        for (const auto& nu : partitions_of(b)) {
          ++products;
          if (!(oracle::oracle_product(mu, nu) == schur(mu) * schur(nu))) ++bad;
        }
  for (const auto& mu : up_to(10, 1))
    for (const auto& nu : up_to(10, 1))
      if (mu.weight() * nu.weight() <= 10) {
        ++plethysms;
        if (!(oracle::oracle_plethysm(mu, nu) == plethysm(schur(mu), schur(nu)))) ++bad;
      }
  for (const auto& pi : up_to(3, 1))
    for (const auto& lambda : up_to(5)) {
      const SymFunc o = oracle::oracle_pi_schur(pi, lambda);
      const SymFunc od = oracle::oracle_dual_pi_schur(pi, lambda);
      const SymFunc routes[] = {pi_schur(pi, lambda), cauchy_pi_schur(pi, lambda),
                                vertex_string(pi, lambda, false, 5)};
      const SymFunc dual_routes[] = {dual_pi_schur(pi, lambda), cauchy_dual_pi_schur(pi, lambda),
                                     vertex_string(pi, lambda, true, 5)};
      for (const auto& r : routes) bad += !(r == o);
      for (const auto& r : dual_routes) bad += !(r == od);
      pis += 2;
    }
  note = std::to_string(products) + " products, " + std::to_string(plethysms) + " plethysms, " +
         std::to_string(pis) + " pi-Schur functions, " + std::to_string(bad) + " mismatches";
  return bad == 0;
}

bool littlewood() {
  long n = 0, bad = 0;
  for (const auto& mu : up_to(10, 1))
    for (const auto& nu : up_to(10, 1)) {
      if (mu.weight() * nu.weight() > 10) continue;
      ++n;
      const Partition outer = nu.weight() % 2 ? mu.conjugate() : mu;
      if (!(omega(plethysm(schur(mu), schur(nu))) == plethysm(schur(outer), schur(nu.conjugate())))) ++bad;
    }
  note = std::to_string(n) + " pairs, " + std::to_string(bad) + " mismatches";
  return bad == 0;
}

bool mutation() {
  std::vector<std::pair<std::string, VerificationReport>> runs;
  {
    ReorderingConfig c;
    c.max_pi_weight = 2;
    c.test_degree = 3;
    c.perturb = true;
    runs.emplace_back("reordering", verify_reordering(c));
  }
  runs.emplace_back("zero-modes", verify_zero_modes({{-3, 3}, true}));
  {
    CliffordConfig c;
    c.degree_bound = 3;
    c.perturb = true;
    runs.emplace_back("clifford", verify_clifford(c));
  }
  {
    MultivertexConfig c;
    c.perturb = true;
    runs.emplace_back("multivertex", verify_multivertex(c));
  }
  {
    Theorem2Config c;
    c.max_pi_weight = 2;
    c.max_weight = 4;
    c.oracle = false;
    c.perturb = true;
    runs.emplace_back("theorem2", verify_theorem2(c));
  }
  {
    InverseSeriesConfig c;
    c.perturb = true;
    runs.emplace_back("inverse-series", verify_inverse_series(c));
  }
  bool ok = true;
  note.clear();
  for (const auto& [name, r] : runs) {
    if (!note.empty()) note += ", ";
    note += name + " " + std::to_string(r.failures.size());
    ok = ok && !r.passed();
  }
  note = "failures under perturbation: " + note;
  return ok;
}

int run_command(const std::string& cmd, std::string& out) {
  out.clear();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool determinism() {
  bool ok = true;
  note.clear();
  for (const auto& suite : suite_names()) {
    const std::string base = std::string("\"") + PVO_CLI_PATH + "\" verify " + suite + " --format json --no-timing";
    std::string one, eight;
    const int s1 = run_command(base + " --jobs 1", one);
    const int s8 = run_command(base + " --jobs 8", eight);
    const bool same = s1 == 0 && s8 == 0 && !one.empty() && one == eight;
    if (!note.empty()) note += ", ";
    note += suite + (same ? " identical" : " DIFFERENT (exit " + std::to_string(s1) + "/" + std::to_string(s8) + ")");
    ok = ok && same;
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"Clifford relations of the vertex-operator modes", clifford},
      {"reordering identities MM, LM, ML, LL", reordering},
      {"zero-mode identities", zero_modes},
      {"multi-vertex normal ordering", multivertex},
      {"four-route pi-Schur agreement and conjugation", theorem2},
      {"classical vertex strings give Schur functions", classical},
      {"inverse series and diagonal collapse", inverse_series},
      {"monomial oracle equivalence", oracle_equivalence},
      {"conjugates of plethysms", littlewood},
      {"perturbed suites fail", mutation},
      {"verify output independent of --jobs", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    note.clear();
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %s (%s; %.1f s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), note.c_str(),
                secs);
    std::fflush(stdout);
    failed += !ok;
  }
  return failed ? 1 : 0;
}
