// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "uix/month.hpp"

namespace uix::econ {

/// Per-variable pre-estimation transform.
struct Transform {
  bool log = false;
  int diff = 1;
};

/// A balanced monthly panel. Column order is explicit and fixed; it defines
/// the Cholesky ordering downstream.
struct MacroPanel {
  std::vector<YearMonth> months;
  std::vector<std::string> names;
  Eigen::MatrixXd values;  // rows = months, cols = variables
  std::vector<Transform> transforms;

  std::size_t rows() const { return months.size(); }
  std::size_t cols() const { return names.size(); }
};

/// Reads a CSV whose first column is `month` (YYYY-MM) and remaining
/// columns are named series. Rows are sorted by month; gaps, duplicates,
/// and missing cells are rejected. Transforms default to {no log, diff 1}.
MacroPanel read_panel_csv(const std::filesystem::path& path);

/// Applies each variable's transform: log first (rejecting non-positive
/// values), then differencing to its order. All series are re-aligned on
/// the common shortened month axis (trimmed to the largest diff order).
MacroPanel transform_series(const MacroPanel& panel);

/// Keeps rows with lo <= month <= hi.
MacroPanel filter_months(const MacroPanel& panel, YearMonth lo, YearMonth hi);

}  // namespace uix::econ
