#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lenstorsion {

struct CheckResult {
  std::string name;
  /// Largest residual observed (for tail-aware checks: residual minus tail allowance).
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::int64_t cases = 0;
  bool passed = true;
};

struct LedgerConfig {
  std::uint64_t seed = 0;
  /// Lens spaces use mu in {1, ..., max_mu} and n in {1, ..., max_n}.
  int max_mu = 8;
  int max_n = 2;
  /// Random points per randomized identity.
  int samples = 100;
  /// Truncation for the direct spectral sum comparison.
  int truncation = 40;
};

/// Runs every identity used between the spectrum and the closed forms over a seeded grid.
std::vector<CheckResult> run_identity_ledger(const LedgerConfig& config);

}  // namespace lenstorsion
