#pragma once

// Exhaustive checks of the operator identities over finite ranges. Each suite
// expands its config into independent cases, runs them on `jobs` threads and
// merges the failures back in case order, so reports never depend on jobs.

#include <string>
#include <vector>

#include "json.hpp"
#include "pvo/partition.hpp"

namespace pvo {

/// Inclusive integer range; hi < lo is empty.
struct Interval {
  int lo = 0;
  int hi = -1;

  bool empty() const { return hi < lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct FailureRecord {
  nlohmann::json inputs;
  nlohmann::json lhs;
  nlohmann::json rhs;

  friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

struct VerificationReport {
  std::string suite;
  nlohmann::json config;
  long cases_run = 0;
  std::vector<FailureRecord> failures;
  long elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct RunOptions {
  int jobs = 1;
  /// false reports elapsed_ms = 0, for byte-comparable output.
  bool timing = true;
};

// Each config carries `perturb`: run the suite against a deliberately wrong
// right-hand side. A perturbed run that passes means the suite checks nothing.

enum class ReorderCase { MM, LM, ML, LL };
std::string to_string(ReorderCase c);
ReorderCase parse_reorder_case(const std::string& s);

struct ReorderingConfig {
  std::vector<ReorderCase> cases{ReorderCase::MM, ReorderCase::LM, ReorderCase::ML, ReorderCase::LL};
  /// Empty means every partition of weight 1..max_pi_weight.
  std::vector<Partition> pis;
  int max_pi_weight = 4;
  Interval z_range{0, 4};
  Interval w_range{0, 4};
  int test_degree = 5;
  /// Swap M and L in the k = 0 factor of the right-hand side.
  bool perturb = false;
};

struct ZeroModesConfig {
  Interval charges{-3, 3};
  /// Misstates the scalar prefactor of the first identity.
  bool perturb = false;
};

struct CliffordConfig {
  std::vector<Partition> pis{Partition{}, Partition{2}, Partition{1, 1},
                             Partition{3}, Partition{2, 1}, Partition{4}};
  Interval modes{-3, 3};
  int degree_bound = 5;
  Interval charges{-1, 1};
  /// Use ModeConvention::ChargeFree.
  bool perturb = false;
};

struct MultivertexConfig {
  std::vector<Partition> pis{Partition{2}, Partition{2, 1}};
  std::vector<int> lengths{2, 3};
  /// Also check the mixed pairs V V* and V* V.
  bool mixed = true;
  Interval window{-3, 3};
  std::vector<Partition> inputs{Partition{}, Partition{1}};
  /// Drop the prefactor from the normal-ordered side.
  bool perturb = false;
};

struct Theorem2Config {
  /// Empty means every partition of weight 1..max_pi_weight.
  std::vector<Partition> pis;
  int max_pi_weight = 4;
  int max_weight = 6;
  int max_length = 3;
  bool oracle = true;
  /// Drop the sign (-1)^|lambda| in the conjugation identity.
  bool perturb = false;
};

struct InverseSeriesConfig {
  int max_sigma_weight = 3;
  int max_degree = 12;
  int max_pi_weight = 4;
  int max_z_weight = 12;
  /// Test inputs s[lambda], |lambda| <= this, for R(z,z) applied as an operator.
  int operator_degree = 4;
  Interval window{-3, 3};
  /// Pair M_sigma with M_sigma.
  bool perturb = false;
};

VerificationReport verify_reordering(const ReorderingConfig& cfg, const RunOptions& run = {});
VerificationReport verify_zero_modes(const ZeroModesConfig& cfg, const RunOptions& run = {});
VerificationReport verify_clifford(const CliffordConfig& cfg, const RunOptions& run = {});
VerificationReport verify_multivertex(const MultivertexConfig& cfg, const RunOptions& run = {});
VerificationReport verify_theorem2(const Theorem2Config& cfg, const RunOptions& run = {});
VerificationReport verify_inverse_series(const InverseSeriesConfig& cfg, const RunOptions& run = {});

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"reordering", "zero-modes",    "clifford",
                                              "multivertex", "theorem2", "inverse-series"};
  return names;
}

/// Human-readable summary, one line per failure.
std::string to_text(const VerificationReport& r);

}  // namespace pvo
