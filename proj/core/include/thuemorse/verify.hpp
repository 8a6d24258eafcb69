#pragma once

// The acceptance criteria as runnable checks. Every check is deterministic
// (fixed seeds) and reports pass, fail, or inconclusive.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "thuemorse/exact.hpp"

namespace thuemorse {

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  /// A budget ran out before the check could decide.
  bool inconclusive = false;
  std::string detail;
  double seconds = 0.0;
};

/// "PASS", "FAIL" or "INCONCLUSIVE".
std::string status(const CheckResult& r);

struct SuiteOptions {
  std::uint32_t seed = 20240611;
  /// Used by lemma-tm and lemma-infinitesimal; other suites fix their own q.
  unsigned q = 2;
  unsigned k_max = 5;
};

/// Shared across the checks of one run: every spread value computed is
/// recorded so that criterion 10 can test containment in Z[1/q].
class SuiteContext {
 public:
  explicit SuiteContext(SuiteOptions options = {}) : options_(options) {}
  const SuiteOptions& options() const noexcept { return options_; }

  void record(const ExactQ& value, unsigned q) { spread_values_.push_back({value, q}); }
  struct Recorded {
    ExactQ value;
    unsigned q;
  };
  const std::vector<Recorded>& spread_values() const noexcept { return spread_values_; }

 private:
  SuiteOptions options_;
  std::vector<Recorded> spread_values_;
};

inline constexpr int kCriterionCount = 13;

/// Criterion id in 1..13.
CheckResult run_criterion(int id, SuiteContext& context);

/// "all" (criteria 1..13 in order), "lemma-tm", "lemma-infinitesimal",
/// "lemma-additive", "presentation", "counting". Throws Error on an unknown
/// name.
std::vector<CheckResult> run_suite(std::string_view name, SuiteContext& context);

/// Names accepted by run_suite.
std::vector<std::string> suite_names();

/// 0 when all passed, 1 when any failed, otherwise 2 if any was inconclusive.
int exit_code(const std::vector<CheckResult>& results);

}  // namespace thuemorse
