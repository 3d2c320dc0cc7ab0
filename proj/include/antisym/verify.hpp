#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace antisym::verify {

/// One named acceptance check: what was claimed, what came out, and whether
/// it passed within the pinned tolerance. `error` is set when the check
/// aborted on an exception instead of finishing.
struct CheckResult {
  std::string name;
  std::string reference;
  std::string inputs;
  std::string expected;
  std::string computed;
  double tolerance = 0;
  bool pass = false;
  double runtime_ms = 0;
  std::string error;
};

/// Size caps and seeds for the suite. Tolerances are pinned inside each
/// check; the caps only clip the ranges (the suite stays non-empty).
struct SuiteConfig {
  int max_n = 64;
  int max_d = 100;
  int restarts = 200;
  std::uint64_t seed = 0;
};

/// Runs all acceptance checks in a fixed order, never throws: failures and
/// exceptions are captured per check.
std::vector<CheckResult> run_acceptance_suite(const SuiteConfig& cfg = {});

bool all_passed(const std::vector<CheckResult>& results);
bool any_errored(const std::vector<CheckResult>& results);

}  // namespace antisym::verify
