// SPDX-License-Identifier: Apache-2.0
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "uix/cli/commands.hpp"
#include "uix/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"event-uncertainty index construction and VAR impact analysis"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool quiet = false;

  auto add_globals = [&](CLI::App* cmd, bool with_config) {
    if (with_config) cmd->add_option("--config", config_path, "JSON config file");
    cmd->add_option("--out", out_dir, "output directory (default: out)");
    cmd->add_option("--seed", seed, "override the bootstrap seed")
        ->each([&](const std::string&) { seed_given = true; });
    cmd->add_flag("--quiet", quiet, "suppress progress output");
  };

  auto* build = app.add_subcommand("build-index", "build the monthly index series from a corpus");
  add_globals(build, true);

  auto* analyze = app.add_subcommand("analyze", "estimate the VAR and write IRF/FEVD outputs");
  add_globals(analyze, true);

  std::string series_a, series_b;
  auto* compare = app.add_subcommand("compare", "correlate two (month,value) series CSVs");
  compare->add_option("series_a", series_a, "first series CSV")->required();
  compare->add_option("series_b", series_b, "second series CSV")->required();
  add_globals(compare, false);

  auto* plot = app.add_subcommand("plot-data", "emit tidy per-figure data files");
  add_globals(plot, false);

  CLI11_PARSE(app, argc, argv);

  uix::cli::RunOptions options;
  options.out = out_dir;
  options.quiet = quiet;
  if (seed_given) options.seed_override = seed;

  try {
    if (build->parsed() || analyze->parsed()) {
      if (config_path.empty()) throw uix::Error("--config is required");
      auto cfg = uix::cli::AnalysisConfig::from_file(config_path);
      if (build->parsed()) {
        uix::cli::cmd_build_index(std::move(cfg), options);
      } else {
        uix::cli::cmd_analyze(std::move(cfg), options);
      }
    } else if (compare->parsed()) {
      uix::cli::cmd_compare(series_a, series_b, options);
    } else if (plot->parsed()) {
      uix::cli::cmd_plot_data(options);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
