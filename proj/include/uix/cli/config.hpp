// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "uix/econ/panel.hpp"
#include "uix/econ/var.hpp"
#include "uix/month.hpp"

namespace uix::cli {

struct LagSpec {
  bool fixed = false;
  int p = 0;  // when fixed
  econ::Criterion criterion = econ::Criterion::AIC;
  int p_max = 6;
};

struct Subperiod {
  std::string name;
  YearMonth lo;
  YearMonth hi;
};

/// Run configuration with every default resolved. The effective form is
/// echoed to JSON so a run can always be reproduced from its own output.
struct AnalysisConfig {
  std::filesystem::path corpus_dir;
  std::filesystem::path lexicon_path;  // empty -> bundled default lexicon
  std::size_t radius = 10;

  std::filesystem::path panel_path;
  std::filesystem::path index_path;  // optional: reuse a previously built index CSV
  std::string index_name = "BRUI";   // variable name of the merged index
  std::string index_series = "brui"; // which index column feeds it
  std::vector<std::string> variable_order;  // empty -> index first, then panel column order
  std::map<std::string, econ::Transform> transforms;

  LagSpec lag;
  int horizons = 10;
  int reps = 999;
  double level = 90.0;
  std::uint64_t seed = 0;
  bool seed_set = false;  // unset seeds are drawn once and recorded
  int threads = 1;
  std::vector<Subperiod> subperiods;

  static AnalysisConfig from_file(const std::filesystem::path& path);
  static AnalysisConfig from_json(const nlohmann::json& j);

  /// Effective config with all defaults resolved; valid from_file input.
  nlohmann::json to_json() const;

  void validate() const;
};

/// The three sample phases used when the config names no subperiods.
std::vector<Subperiod> default_subperiods();

}  // namespace uix::cli
