#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fracpoisson/stats.hpp"

namespace fracpoisson {

struct ValidationOptions {
  std::uint64_t seed = 20240611;
  unsigned jobs = 1;
  /// Multiplier on Monte Carlo sample sizes; 1 is the full suite.
  double scale = 1.0;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  /// One line per check, with values printed to full precision.
  std::vector<std::string> checks;
  std::vector<TestResult> tests;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 12;

CriterionResult run_criterion(int id, const ValidationOptions& options);
std::vector<CriterionResult> run_validation(const std::vector<int>& ids, const ValidationOptions& options);

/// Timing-free text form of a result, used for reproducibility comparisons.
std::string serialize(const CriterionResult& result);

}  // namespace fracpoisson
