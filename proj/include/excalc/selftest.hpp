#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace excalc {

/// Outcome of one randomized identity check.
struct CheckResult {
  std::string name;
  int cases = 0;
  bool passed = false;
  std::string detail;  ///< first failure, empty when passed
};

struct SelftestOptions {
  std::uint64_t seed = 42;
  int count = 100;       ///< cases per identity
  bool numeric = false;  ///< include the quadrature / finite-difference oracles
};

/// Runs the randomized operator-identity suite (homotopy, Dolbeault and
/// form-algebra laws; optionally the numeric oracles) and reports one row
/// per identity. Deterministic for a fixed seed and count.
std::vector<CheckResult> run_selftest(const SelftestOptions& opt);

}  // namespace excalc
