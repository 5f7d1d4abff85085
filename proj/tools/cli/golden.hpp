#pragma once

#include <string>
#include <vector>

namespace steer::cli {

/// One published value checked against a recomputation.
struct GoldenCheck {
  std::string name;
  double expected;
  double observed;
  double tolerance;
  /// Pass when observed <= expected + tolerance (match-or-beat minima).
  bool one_sided = false;
  bool pass = false;
};

struct GoldenOptions {
  bool include_optimizer = true;
};

/// Recomputes every published value. Deterministic (fixed seeds).
std::vector<GoldenCheck> run_golden_suite(const GoldenOptions& options = {});

std::string golden_report_json(const std::vector<GoldenCheck>& checks);

}  // namespace steer::cli
