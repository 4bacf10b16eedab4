#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk {

struct VerifyConfig {
  long t_max = 64;
  int n_specs = 25;
  std::uint64_t seed = 20240917;
  /// Only run the documented-divergence checks, reporting printed values.
  bool paper_signs = false;
};

struct CheckResult {
  std::string name;
  std::string kind;  // "identity" | "oracle" | "documented-divergence"
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  std::string to_json() const;
};

/// Seeded random valid specs (uniform |a|, |c0| and phases).
std::vector<WalkSpec> random_specs(int n, std::uint64_t seed);

VerifyReport run_verification(const VerifyConfig& cfg);

}  // namespace qwalk
