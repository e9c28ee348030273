// SPDX-License-Identifier: Apache-2.0

#ifndef ZETASUM_SELFTEST_HPP
#define ZETASUM_SELFTEST_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetasum/quadrature.hpp"

namespace zetasum {

enum class SelftestLevel { quick, full };

std::string_view to_string(SelftestLevel level);
std::optional<SelftestLevel> parse_selftest_level(std::string_view name);

struct CheckResult {
  std::string module;
  std::string name;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  int points = 0;
  bool passed = false;
  std::string detail;  // first failing point or exception text
};

struct SelftestReport {
  SelftestLevel level = SelftestLevel::quick;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  int failed() const;
  bool passed() const { return failed() == 0; }
};

/// Runs the invariant checks of every module. `full` widens the grids to the
/// complete acceptance grids. A point also fails when its evaluation reports
/// non-convergence or throws.
SelftestReport run_selftest(SelftestLevel level, const QuadratureConfig& cfg);

}  // namespace zetasum

#endif  // ZETASUM_SELFTEST_HPP
