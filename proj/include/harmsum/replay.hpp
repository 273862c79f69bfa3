#pragma once

#include <optional>
#include <string>
#include <vector>

#include "harmsum/numcore.hpp"

namespace harmsum {

/// One numeric equality inside a step: two independently computed values.
struct ReplayCheck {
  std::string label;
  Real lhs;
  Real rhs;
  Real residual;
};

struct ReplayStep {
  int index = 0;
  /// "i" .. "xiv".
  std::string numeral;
  std::string title;
  std::string anchor;
  /// Pure reindexing links, tautological once both sides are summed.
  bool structural = false;
  /// Digits the step's methods certify; the tolerance is 10^-min(digits, cap).
  int cap = 30;
  std::vector<ReplayCheck> checks;
  /// Largest absolute residual among the checks.
  Real residual;
  Real tolerance;
  bool pass = false;
};

struct ReplayReport {
  int requested_digits = 0;
  int working_digits = 0;
  /// Steps run so far; the run halts after the first failing step.
  std::vector<ReplayStep> steps;
  std::optional<int> failed_step;
  bool passed() const { return !failed_step && steps.size() == kReplaySteps; }
  static constexpr std::size_t kReplaySteps = 14;
};

/// Replays the proof chain for the rate-1/2 series as fourteen ordered
/// numeric checks, each evaluated 5 digits above the request. Throws
/// DomainError unless 1 <= digits <= 30.
ReplayReport replay_proof(int digits);

std::string replay_json(const ReplayReport& report);

}  // namespace harmsum
