#pragma once

// The property suites behind `selftest`. Every suite runs a fixed census of
// seeded randomized checks; results are deterministic given the seed. Suite
// order and per-suite RNG streams are fixed so reports are byte-stable.

#include <optional>
#include <string>
#include <vector>

namespace ogm {

struct SuiteResult {
  std::string name;
  bool pass = true;
  long cases = 0;                      // individual checks executed
  std::vector<std::string> failures;   // first few failure descriptions
};

struct SelfTestReport {
  unsigned long seed = 0;
  std::vector<SuiteResult> suites;
  bool all_pass() const;
};

const std::vector<std::string>& selftest_suite_names();

// suite empty runs everything; unknown names throw precondition_error
SelfTestReport run_selftest(unsigned long seed,
                            const std::optional<std::string>& suite = std::nullopt);

}  // namespace ogm
