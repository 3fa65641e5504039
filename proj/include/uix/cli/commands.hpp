// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include "uix/cli/config.hpp"

namespace uix::cli {

struct RunOptions {
  std::filesystem::path out = "out";
  bool quiet = false;
  std::optional<std::uint64_t> seed_override;
};

/// Builds the index series from the corpus and writes index.csv, the
/// index.json mirror, and summary.json (keyword totals and zero-count
/// flags) into the output directory.
void cmd_build_index(AnalysisConfig config, const RunOptions& options);

/// Merges the index into the panel as the first-ordered variable, applies
/// transforms, estimates the VAR per scope (full sample plus subperiods),
/// and writes irf_<scope>.csv, fevd_<scope>.csv, report.json, and
/// effective_config.json. A scope that fails is recorded in the report
/// without aborting the others.
void cmd_analyze(AnalysisConfig config, const RunOptions& options);

/// Month-intersection correlation of two (month, value) CSVs; writes
/// compare.json.
void cmd_compare(const std::filesystem::path& series_a, const std::filesystem::path& series_b,
                 const RunOptions& options);

/// Emits tidy per-figure data files under <out>/plot from whatever
/// analysis outputs exist in <out>.
void cmd_plot_data(const RunOptions& options);

}  // namespace uix::cli
