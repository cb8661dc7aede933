#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wavelab {

struct AcceptanceOptions {
  std::uint64_t seed = 20240611;
  int jobs = 1;
  /// Also fail on advisory flags: poor fits (r^2 < 0.99), probes outside a
  /// causal window, Kirchhoff refinement hitting its cap.
  bool strict = false;
};

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
  std::vector<std::pair<std::string, double>> metrics;
};

/// Number of criteria in the battery (ids 1..count).
int acceptance_criterion_count();

/// Runs one criterion. Exceptions from the numerics are caught and reported
/// as a failure with the message in `detail`.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

/// Runs the given criteria (all when empty) in id order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            std::span<const int> ids = {});

/// One line: "PASS  3 group_law_time_reversal  <detail> (0.12 s)".
std::string format_criterion(const CriterionResult& result);

}  // namespace wavelab
