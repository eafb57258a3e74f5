#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lvpert/series.hpp"

namespace lvpert {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

using SeriesBuilder = std::function<SeriesSolution(const InitialValueProblem&, int)>;

struct VerifyOptions {
  /// Orders for the per-order divergence sweep.
  std::vector<int> orders{4, 8, 12, 16, 20};
  /// Time-series builder under test; replaced in mutation tests.
  SeriesBuilder taylor = taylor_coefficients;
};

/// Runs the method-equivalence, conservation, closure, divergence and
/// self-intersection checks on the case-I and case-V presets.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results) noexcept;

}  // namespace lvpert
