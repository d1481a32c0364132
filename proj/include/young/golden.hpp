#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace young {

struct GoldenSide {
  std::string side;  // "lower" or "upper"
  double expected = 0.0;
  std::optional<double> actual;
  double delta = 0.0;
  bool passed = false;
};

struct GoldenOutcome {
  std::string file;
  std::string method;
  bool passed = false;
  std::string error;
  std::vector<GoldenSide> sides;
};

struct GoldenSummary {
  std::vector<GoldenOutcome> outcomes;
  int passed = 0;
  int failed = 0;
  bool ok() const noexcept { return failed == 0 && passed > 0; }
  std::string text() const;
};

/// Recomputes one fixture:
///   {"problem": {...}, "method": "...", "quantity": "sum" | "native",
///    "expected": {"lower": x, "upper": y}, "tolerance": 1e-12,
///    "truncate_decimals": k (optional)}
/// With truncate_decimals the value must truncate to the expected digits.
GoldenOutcome verify_fixture(const std::filesystem::path& file);

/// Every *.json fixture in `dir`, in name order. Throws MissingFixture when
/// the directory is absent or holds no fixtures. Never writes anything.
GoldenSummary verify_golden(const std::filesystem::path& dir);

}  // namespace young
