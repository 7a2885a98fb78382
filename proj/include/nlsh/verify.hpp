#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlsh::verify {

struct CheckResult {
  std::string name;
  std::string regime;
  bool pass = false;
  std::string detail;
};

// Runs the acceptance checks, optionally restricted to one regime tag
// ("critical", "closedform", "identities", "thresholds", "counting",
// "minimizer", "asymptotics", or "all"). When log is non-null a
// "[PASS]/[FAIL] name - detail" line is emitted per check as it completes.
std::vector<CheckResult> run_acceptance(const std::string& regime = "all",
                                        std::ostream* log = nullptr);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace nlsh::verify
