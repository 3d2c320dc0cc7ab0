// Acceptance suite runner: one line per criterion, nonzero exit on failure.

#include <cstdio>

#include "antisym/verify.hpp"

int main() {
  const auto results = antisym::verify::run_acceptance_suite({});
  int index = 0;
  for (const auto& r : results) {
    ++index;
    std::printf("[%2d/%zu] %-32s %s (%.1f ms)\n", index, results.size(), r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.runtime_ms);
    if (!r.pass) {
      std::printf("        claim:    %s\n", r.reference.c_str());
      std::printf("        inputs:   %s\n", r.inputs.c_str());
      std::printf("        expected: %s\n", r.expected.c_str());
      std::printf("        computed: %s\n", r.computed.c_str());
      if (!r.error.empty()) std::printf("        error:    %s\n", r.error.c_str());
    }
  }
  const bool ok = antisym::verify::all_passed(results);
  std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
  return ok ? 0 : 1;
}
