#pragma once

// Property suites run by `omega_zeta verify` and by the acceptance binary.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace omega_zeta {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  // Worst observed statistic and the threshold it was held to; both NaN for
  // purely boolean checks.
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

// pfd, phi, zeta, gamma, zeta3, oracle
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all". A tolerance T relaxes each
// numeric threshold to max(threshold, T); it never tightens one. DomainError
// for an unknown suite name.
std::vector<CheckResult> run_verify(std::string_view suite, std::optional<double> tolerance,
                                    int threads = 1);

}  // namespace omega_zeta
