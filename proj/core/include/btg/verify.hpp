#pragma once

// Lemma verification driver: each suite runs exact or sampled checks and
// records one line per claim with a witness.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace btg {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string witness;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  std::size_t failures() const;
  /// {"passed": bool, "checks": [{suite, name, passed, witness}, ...]}
  std::string to_json(int indent = 2) const;
};

/// table1, norms, gamma, zariski, simplicial, gauss, partition.
const std::vector<std::string>& verify_suites();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// an unknown suite name.
VerifyReport run_verify(std::string_view suite, std::uint64_t seed = 1);

}  // namespace btg
