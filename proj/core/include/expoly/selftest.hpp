#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "expoly/serialize.hpp"

namespace expoly {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  Json detail;
  double seconds = 0.0;  // wall time; never part of a report
};

inline constexpr int kCriterionCount = 8;

/// Runs one acceptance criterion (1..8) with batteries derived from `seed`.
CriterionResult run_criterion(int id, std::uint64_t seed);

std::vector<CriterionResult> run_selftest(std::uint64_t seed);

/// Deterministic report: seed, per-criterion pass/fail and details, overall verdict.
Json selftest_report(std::uint64_t seed, const std::vector<CriterionResult>& results);

}  // namespace expoly
