#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace young {

struct SweepViolation {
  std::string kind;  // SANDWICH, REDUCTION, EQUALITY, NONNEGATIVITY
  std::string method;
  std::string detail;
  /// Problem JSON that replays the instance.
  std::string instance;
};

struct SweepSummary {
  std::uint64_t seed = 0;
  int count = 0;
  int equality_instances = 0;
  int estimates = 0;
  int not_applicable = 0;
  int sandwich_checks = 0;
  int reduction_checks = 0;
  int equality_checks = 0;
  /// Instances or estimators that raised; listed, not fatal.
  std::vector<std::string> errors;
  std::vector<SweepViolation> violations;

  int violation_count(const std::string& kind) const;
  std::string text() const;
};

inline constexpr double kSandwichTol = 1e-9;
inline constexpr double kEqualityTol = 1e-10;

/// Random instances from the test family; deterministic for a given seed.
SweepSummary sweep(std::uint64_t seed, int count);

/// The i-th generated instance as a problem-file JSON string.
std::string sweep_instance_json(std::uint64_t seed, int index);

}  // namespace young
