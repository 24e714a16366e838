// pvo: command-line front end for the symmetric-function kernel.
//
// Exit status: 0 success, 1 a check failed (verify, cross-check, oracle),
// 2 bad arguments or config, 3 a computation exceeded its budget.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pvo/oracle.hpp"
#include "pvo/plethysm.hpp"
#include "pvo/serialize.hpp"
#include "pvo/verifier.hpp"
#include "pvo/vertex.hpp"

using namespace pvo;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kBudget = 3 };

/// Argument error tied to the flag that caused it.
struct UsageError : std::runtime_error {
  UsageError(const std::string& flag, const std::string& what)
      : std::runtime_error(flag + ": " + what) {}
};

struct CliConfig {
  int degree_budget = kDefaultDegreeBudget;
  Interval mode_range{-3, 3};
  Interval charge_range{-3, 3};
  std::optional<Interval> window;
  int jobs = 1;
  std::string format = "text";
};

Interval parse_interval(const std::string& flag, std::string s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  auto sep = t.find_first_of(",:");
  if (sep == std::string::npos) throw UsageError(flag, "expected [lo,hi], got '" + s + "'");
  try {
    std::size_t used = 0;
    Interval i;
    i.lo = std::stoi(t.substr(0, sep), &used);
    if (used != sep) throw std::invalid_argument("trailing characters");
    const std::string rest = t.substr(sep + 1);
    i.hi = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing characters");
    return i;
  } catch (const std::exception&) {
    throw UsageError(flag, "expected [lo,hi], got '" + s + "'");
  }
}

Partition parse_shape(const std::string& flag, const std::string& s) {
  try {
    return parse_partition(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag, e.what());
  }
}

int parse_int(const std::string& flag, const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw UsageError(flag, "expected an integer, got '" + s + "'");
  }
}

/// key = value lines; '#' starts a comment.
void load_config_file(const std::string& path, CliConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw UsageError("config", "cannot read '" + path + "'");
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto eq = line.find('=');
    auto trim = [](std::string x) {
      const auto b = x.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      return x.substr(b, x.find_last_not_of(" \t\r") - b + 1);
    };
    if (trim(line).empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw UsageError(where, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "degree_budget") {
      cfg.degree_budget = parse_int(key, value);
      if (cfg.degree_budget < 0) throw UsageError(where, "degree_budget must be >= 0");
    } else if (key == "mode_range") {
      cfg.mode_range = parse_interval(key, value);
    } else if (key == "charge_range") {
      cfg.charge_range = parse_interval(key, value);
    } else if (key == "window") {
      cfg.window = parse_interval(key, value);
    } else if (key == "jobs") {
      cfg.jobs = parse_int(key, value);
    } else if (key == "format") {
      cfg.format = value;
    } else {
      throw UsageError(where, "unknown key '" + key + "'");
    }
  }
}

// ---------------------------------------------------------------------------

struct Output {
  const CliConfig& cfg;

  bool json() const { return cfg.format == "json"; }
  void emit(const Json& j, const std::string& text) const {
    if (json()) std::cout << j.dump(2) << "\n";
    else std::cout << text << "\n";
  }
};

SymFunc run_route(const std::string& route, const Partition& pi, const Partition& lambda, bool dual) {
  if (route == "perp") return dual ? dual_pi_schur(pi, lambda) : pi_schur(pi, lambda);
  if (route == "cauchy") return dual ? cauchy_dual_pi_schur(pi, lambda) : cauchy_pi_schur(pi, lambda);
  if (route == "vertex") return vertex_string(pi, lambda, dual);
  if (route == "oracle")
    return dual ? oracle::oracle_dual_pi_schur(pi, lambda) : oracle::oracle_pi_schur(pi, lambda);
  throw UsageError("--route", "unknown route '" + route + "'");
}

int cmd_pi_schur(const Output& out, const std::string& pi_s, const std::string& lambda_s,
                 std::vector<std::string> routes, bool check_oracle, bool dual) {
  const Partition pi = parse_shape("--pi", pi_s);
  const Partition lambda = parse_shape("--lambda", lambda_s);
  if (pi.empty()) throw UsageError("--pi", "pi must be nonempty");
  if (routes.empty()) routes.push_back("perp");
  if (check_oracle && std::find(routes.begin(), routes.end(), "oracle") == routes.end())
    routes.push_back("oracle");

  std::vector<std::pair<std::string, SymFunc>> values;
  for (const auto& r : routes) values.emplace_back(r, run_route(r, pi, lambda, dual));
  bool agree = true;
  for (const auto& [r, v] : values) agree = agree && v == values.front().second;

  if (values.size() == 1) {
    out.emit(symfunc_to_json(values[0].second), to_string(values[0].second));
    return kOk;
  }
  Json j = {{"value", symfunc_to_json(values[0].second)}, {"agree", agree}};
  std::ostringstream text;
  text << to_string(values[0].second);
  for (const auto& [r, v] : values) {
    j["routes"][r] = symfunc_to_json(v);
    text << "\n  " << r << ": " << to_string(v);
  }
  text << "\n  routes " << (agree ? "agree" : "DISAGREE");
  out.emit(j, text.str());
  return agree ? kOk : kCheckFailed;
}

int emit_checked(const Output& out, const SymFunc& value, const std::optional<SymFunc>& oracle_value) {
  if (!oracle_value) {
    out.emit(symfunc_to_json(value), to_string(value));
    return kOk;
  }
  const bool agree = value == *oracle_value;
  Json j = {{"value", symfunc_to_json(value)}, {"oracle", symfunc_to_json(*oracle_value)}, {"agree", agree}};
  out.emit(j, to_string(value) + "\n  oracle: " + to_string(*oracle_value) +
                  (agree ? "\n  oracle agrees" : "\n  oracle DISAGREES"));
  return agree ? kOk : kCheckFailed;
}

Family parse_family(const std::string& s) {
  if (s == "M") return Family::M;
  if (s == "L") return Family::L;
  throw UsageError("--family", "expected M or L, got '" + s + "'");
}

ModeKind parse_kind(const std::string& s) {
  if (s == "X") return ModeKind::X;
  if (s == "Xstar") return ModeKind::Xstar;
  throw UsageError("--kind", "expected X or Xstar, got '" + s + "'");
}

std::vector<Partition> parse_shapes(const std::string& flag, const std::vector<std::string>& v) {
  std::vector<Partition> out;
  for (const auto& s : v) out.push_back(parse_shape(flag, s));
  return out;
}

struct VerifyArgs {
  std::string suite;
  std::vector<std::string> pis;
  std::optional<int> max_pi_weight;
  std::optional<int> max_weight;
  std::optional<int> max_length;
  std::optional<std::string> modes;
  std::optional<std::string> charges;
  std::optional<std::string> window;
  std::optional<int> degree;
  std::vector<std::string> cases;
  std::vector<int> lengths;
  std::vector<std::string> inputs;
  bool no_oracle = false;
  bool no_mixed = false;
  bool perturb = false;
  bool no_timing = false;
};

int cmd_verify(const Output& out, const CliConfig& cfg, const VerifyArgs& a) {
  const RunOptions run{cfg.jobs, !a.no_timing};
  const Interval modes = a.modes ? parse_interval("--modes", *a.modes) : cfg.mode_range;
  const Interval charges = a.charges ? parse_interval("--charges", *a.charges) : cfg.charge_range;
  std::optional<Interval> window = cfg.window;
  if (a.window) window = parse_interval("--window", *a.window);
  const auto pis = parse_shapes("--pi", a.pis);

  VerificationReport report;
  if (a.suite == "reordering") {
    ReorderingConfig c;
    c.pis = pis;
    if (a.max_pi_weight) c.max_pi_weight = *a.max_pi_weight;
    if (window) c.z_range = c.w_range = *window;
    if (a.degree) c.test_degree = *a.degree;
    if (!a.cases.empty()) {
      c.cases.clear();
      for (const auto& s : a.cases) {
        try {
          c.cases.push_back(parse_reorder_case(s));
        } catch (const std::invalid_argument& e) {
          throw UsageError("--case", e.what());
        }
      }
    }
    c.perturb = a.perturb;
    for (const auto& p : c.pis)
      if (p.empty()) throw UsageError("--pi", "pi must be nonempty");
    report = verify_reordering(c, run);
  } else if (a.suite == "zero-modes") {
    ZeroModesConfig c;
    c.charges = charges;
    c.perturb = a.perturb;
    report = verify_zero_modes(c, run);
  } else if (a.suite == "clifford") {
    CliffordConfig c;
    if (!pis.empty()) c.pis = pis;
    c.modes = modes;
    c.charges = charges;
    if (a.degree) c.degree_bound = *a.degree;
    c.perturb = a.perturb;
    report = verify_clifford(c, run);
  } else if (a.suite == "multivertex") {
    MultivertexConfig c;
    if (!pis.empty()) c.pis = pis;
    if (!a.lengths.empty()) c.lengths = a.lengths;
    for (int m : c.lengths)
      if (m < 1 || m > 3) throw UsageError("--length", "string lengths must lie in 1..3");
    if (window) c.window = *window;
    if (!a.inputs.empty()) c.inputs = parse_shapes("--input", a.inputs);
    c.mixed = !a.no_mixed;
    c.perturb = a.perturb;
    report = verify_multivertex(c, run);
  } else if (a.suite == "theorem2") {
    Theorem2Config c;
    c.pis = pis;
    if (a.max_pi_weight) c.max_pi_weight = *a.max_pi_weight;
    if (a.max_weight) c.max_weight = *a.max_weight;
    if (a.max_length) c.max_length = *a.max_length;
    c.oracle = !a.no_oracle;
    c.perturb = a.perturb;
    for (const auto& p : c.pis)
      if (p.empty()) throw UsageError("--pi", "pi must be nonempty");
    report = verify_theorem2(c, run);
  } else if (a.suite == "inverse-series") {
    InverseSeriesConfig c;
    if (a.max_pi_weight) c.max_pi_weight = *a.max_pi_weight;
    if (a.max_weight) c.max_degree = c.max_z_weight = *a.max_weight;
    if (a.degree) c.operator_degree = *a.degree;
    if (window) c.window = *window;
    c.perturb = a.perturb;
    report = verify_inverse_series(c, run);
  } else {
    throw UsageError("suite", "unknown suite '" + a.suite + "'");
  }

  if (out.json()) std::cout << report_to_json(report).dump(2) << "\n";
  else std::cout << to_text(report);
  return report.passed() ? kOk : kCheckFailed;
}

// CLI11 reads "[3,1]" as an array literal when the target is a vector, so
// repeatable shape options collect one raw string per occurrence instead.
CLI::Option* add_repeated(CLI::App* sub, const std::string& name, std::vector<std::string>& out,
                          const std::string& help = "") {
  return sub
      ->add_option_function<std::string>(name, [&out](const std::string& v) { out.push_back(v); }, help)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
      ->trigger_on_parse();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric functions, plethysm and plethystic vertex operators"};
  app.require_subcommand(1);
  // global options may also follow the subcommand
  app.fallthrough();

  CliConfig cfg;
  std::string config_path;
  if (const char* env = std::getenv("PVO_CONFIG")) config_path = env;
  std::optional<std::string> format;
  std::optional<int> jobs;
  std::optional<int> degree_budget;
  bool no_timing = false;
  app.add_option("--config", config_path, "key = value config file (default $PVO_CONFIG)");
  app.add_option("--format", format, "text or json");
  app.add_option("--jobs", jobs, "worker threads for verify");
  app.add_option("--degree-budget", degree_budget, "largest plethysm degree to attempt");

  std::string pi_s, lambda_s, mu_s, nu_s, outer_s, inner_s, shape_s, family_s, kind_s, state_s, m_s;
  std::vector<std::string> routes, skews;
  bool check_oracle = false;
  int max_r = 6;

  auto* ps = app.add_subcommand("pi-schur", "pi-Schur function s^(pi)_lambda");
  ps->add_option("--pi", pi_s)->required();
  ps->add_option("--lambda", lambda_s)->required();
  ps->add_option("--route", routes, "vertex, perp, cauchy or oracle; several to cross-check")->delimiter(',');
  ps->add_flag("--check-oracle", check_oracle);

  auto* dps = app.add_subcommand("dual-pi-schur", "dual pi-Schur function s*^(pi)_lambda");
  dps->add_option("--pi", pi_s)->required();
  dps->add_option("--lambda", lambda_s)->required();
  dps->add_option("--route", routes)->delimiter(',');
  dps->add_flag("--check-oracle", check_oracle);

  auto* br = app.add_subcommand("branch", "M_pi^perp s[lambda]");
  br->add_option("--pi", pi_s)->required();
  br->add_option("--lambda", lambda_s)->required();

  auto* pr = app.add_subcommand("product", "s[mu] s[nu]");
  pr->add_option("--mu", mu_s)->required();
  pr->add_option("--nu", nu_s)->required();
  pr->add_flag("--check-oracle", check_oracle);

  auto* sk = app.add_subcommand("skew", "s[lambda/mu]");
  sk->add_option("--lambda", lambda_s)->required();
  sk->add_option("--mu", mu_s)->required();

  auto* pl = app.add_subcommand("plethysm", "s[outer][s[inner]]");
  pl->add_option("--outer", outer_s)->required();
  pl->add_option("--inner", inner_s)->required();
  pl->add_flag("--check-oracle", check_oracle);

  auto* se = app.add_subcommand("series", "terms of M_sigma or L_sigma");
  se->add_option("--family", family_s)->required();
  se->add_option("--shape", shape_s)->required();
  add_repeated(se, "--skew", skews, "remove these shapes from sigma (repeatable)");
  se->add_option("--max-r", max_r);

  auto* mo = app.add_subcommand("mode", "apply one vertex-operator mode to a charged state");
  mo->add_option("--pi", pi_s)->required();
  mo->add_option("--kind", kind_s)->required();
  mo->add_option("--m", m_s)->required()->allow_extra_args(false);
  mo->add_option("--state", state_s, "ChargedState JSON (default |0, 1>)");

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "run a verification suite");
  ve->add_option("suite", va.suite, "reordering, zero-modes, clifford, multivertex, theorem2, inverse-series")
      ->required();
  add_repeated(ve, "--pi", va.pis, "restrict to these shapes (repeatable)");
  ve->add_option("--max-pi-weight", va.max_pi_weight);
  ve->add_option("--max-weight", va.max_weight);
  ve->add_option("--max-length", va.max_length);
  ve->add_option("--modes", va.modes, "mode range [lo,hi]");
  ve->add_option("--charges", va.charges, "charge range [lo,hi]");
  ve->add_option("--window", va.window, "exponent window [lo,hi] for every variable");
  ve->add_option("--degree", va.degree, "largest test-input degree");
  add_repeated(ve, "--case", va.cases, "reordering case MM, LM, ML or LL (repeatable)");
  ve->add_option("--length", va.lengths, "operator string length (repeatable)");
  add_repeated(ve, "--input", va.inputs, "test input shape (repeatable)");
  ve->add_flag("--no-oracle", va.no_oracle);
  ve->add_flag("--no-mixed", va.no_mixed);
  ve->add_flag("--perturb", va.perturb, "check against a deliberately wrong right-hand side");
  ve->add_flag("--no-timing", no_timing, "report elapsed_ms as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (!config_path.empty()) load_config_file(config_path, cfg);
    if (format) cfg.format = *format;
    if (jobs) cfg.jobs = *jobs;
    if (degree_budget) cfg.degree_budget = *degree_budget;
    if (cfg.format != "text" && cfg.format != "json")
      throw UsageError("--format", "expected text or json, got '" + cfg.format + "'");
    if (cfg.jobs < 1) throw UsageError("--jobs", "must be at least 1");
    if (cfg.degree_budget < 0) throw UsageError("--degree-budget", "must be >= 0");
    va.no_timing = no_timing;
    const Output out{cfg};

    if (ps->parsed() || dps->parsed())
      return cmd_pi_schur(out, pi_s, lambda_s, routes, check_oracle, dps->parsed());
    if (br->parsed()) {
      const Partition pi = parse_shape("--pi", pi_s);
      if (pi.empty()) throw UsageError("--pi", "pi must be nonempty");
      const SymFunc v = pi_branch(pi, parse_shape("--lambda", lambda_s));
      out.emit(symfunc_to_json(v), to_string(v));
      return kOk;
    }
    if (pr->parsed()) {
      const Partition mu = parse_shape("--mu", mu_s), nu = parse_shape("--nu", nu_s);
      std::optional<SymFunc> o;
      if (check_oracle) o = oracle::oracle_product(mu, nu);
      return emit_checked(out, product(SymFunc(mu), SymFunc(nu)), o);
    }
    if (sk->parsed()) {
      const SymFunc v = skew(SymFunc(parse_shape("--lambda", lambda_s)), SymFunc(parse_shape("--mu", mu_s)));
      out.emit(symfunc_to_json(v), to_string(v));
      return kOk;
    }
    if (pl->parsed()) {
      const Partition outer = parse_shape("--outer", outer_s), inner = parse_shape("--inner", inner_s);
      const SymFunc v = plethysm(SymFunc(outer), SymFunc(inner), cfg.degree_budget);
      std::optional<SymFunc> o;
      if (check_oracle) o = oracle::oracle_plethysm(outer, inner);
      return emit_checked(out, v, o);
    }
    if (se->parsed()) {
      if (max_r < 0) throw UsageError("--max-r", "must be >= 0");
      const SeriesSpec spec(parse_family(family_s), parse_shape("--shape", shape_s), parse_shapes("--skew", skews));
      Json j = Json::array();
      std::ostringstream text;
      text << spec.to_string();
      for (int r = 0; r <= max_r; ++r) {
        const SymFunc t = series_term(spec, r, cfg.degree_budget);
        j.push_back({{"r", r}, {"value", symfunc_to_json(t)}});
        text << "\n  r=" << r << ": " << to_string(t);
      }
      out.emit(j, text.str());
      return kOk;
    }
    if (mo->parsed()) {
      const Partition pi = parse_shape("--pi", pi_s);
      const int m = parse_int("--m", m_s);
      ChargedState state = ChargedState::pure(0, SymFunc::one());
      if (!state_s.empty()) {
        try {
          state = state_from_json(Json::parse(state_s));
        } catch (const std::exception& e) {
          throw UsageError("--state", e.what());
        }
      }
      const ChargedState v = mode(pi, parse_kind(kind_s), m, state);
      out.emit(state_to_json(v), v.to_string());
      return kOk;
    }
    if (ve->parsed()) return cmd_verify(out, cfg, va);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
