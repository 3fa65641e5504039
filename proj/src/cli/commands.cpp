// SPDX-License-Identifier: Apache-2.0
#include "uix/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "uix/csv.hpp"
#include "uix/econ/fevd.hpp"
#include "uix/econ/irf.hpp"
#include "uix/econ/stats.hpp"
#include "uix/errors.hpp"
#include "uix/indexer.hpp"
#include "uix/lexicon.hpp"

namespace uix::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void progress(const RunOptions& opt, const std::string& msg) {
  if (!opt.quiet) std::cout << msg << "\n";
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

void write_json(const fs::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

fs::path prepare_out(const RunOptions& opt) {
  fs::create_directories(opt.out);
  return opt.out;
}

/// Applies the --seed override, then draws and records a seed if the
/// config left it unset.
void resolve_seed(AnalysisConfig& cfg, const RunOptions& opt) {
  if (opt.seed_override) {
    cfg.seed = *opt.seed_override;
    cfg.seed_set = true;
  }
  if (!cfg.seed_set) {
    std::random_device rd;
    cfg.seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
    cfg.seed_set = true;
  }
}

Lexicon lexicon_for(const AnalysisConfig& cfg) {
  if (cfg.lexicon_path.empty()) return default_lexicon();
  return load_lexicon(cfg.lexicon_path);
}

std::string sanitize(const std::string& name) {
  std::string out = name;
  for (char& c : out) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '-';
    if (!ok) c = '_';
  }
  return out;
}

json index_row_json(const IndexPair& idx, std::size_t i) {
  const auto& a = idx.event_a;
  const auto& b = idx.event_b;
  const auto& c = a.counts[i];
  return json{{"month", a.months[i].str()},
              {"brukn", c.brukn},
              {"crukn", c.crukn},
              {"joint", c.joint},
              {"tbrukn", a.weighted_totals[i]},
              {"tcrukn", b.weighted_totals[i]},
              {"total_words", c.total_words},
              {"brui_raw", a.raw[i]},
              {"brui", a.normalized[i]},
              {"crui_raw", b.raw[i]},
              {"crui", b.normalized[i]}};
}

econ::MonthlySeries read_index_column(const fs::path& path, const std::string& column) {
  const CsvTable table = read_csv(path);
  const auto month_it = std::find(table.header.begin(), table.header.end(), "month");
  const auto col_it = std::find(table.header.begin(), table.header.end(), column);
  if (month_it == table.header.end() || col_it == table.header.end()) {
    throw Error("index: " + path.string() + " lacks columns 'month' and '" + column + "'");
  }
  const auto mi = static_cast<std::size_t>(month_it - table.header.begin());
  const auto ci = static_cast<std::size_t>(col_it - table.header.begin());
  struct Pair {
    YearMonth m;
    double v;
  };
  std::vector<Pair> pairs;
  for (const auto& row : table.rows) {
    const auto m = YearMonth::parse(row[mi]);
    if (!m) throw Error("index: " + path.string() + ": bad month '" + row[mi] + "'");
    pairs.push_back({*m, std::stod(row[ci])});
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.m < b.m; });
  econ::MonthlySeries series;
  series.name = column;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0 && pairs[i].m == pairs[i - 1].m) {
      throw Error("index: " + path.string() + ": duplicate month " + pairs[i].m.str());
    }
    series.months.push_back(pairs[i].m);
    series.values.push_back(pairs[i].v);
  }
  return series;
}

econ::MonthlySeries read_two_column_series(const fs::path& path) {
  const CsvTable table = read_csv(path);
  if (table.header.size() != 2 || table.header[0] != "month") {
    throw Error("compare: " + path.string() + ": expected header month,<name>");
  }
  econ::MonthlySeries series;
  series.name = table.header[1];
  struct Pair { YearMonth m; double v; };
  std::vector<Pair> pairs;
  for (const auto& row : table.rows) {
    const auto m = YearMonth::parse(row[0]);
    if (!m) throw Error("compare: " + path.string() + ": bad month '" + row[0] + "'");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(row[1], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != row[1].size()) {
      throw Error("compare: " + path.string() + ": bad number '" + row[1] + "'");
    }
    pairs.push_back({*m, v});
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.m < b.m; });
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i > 0 && pairs[i].m == pairs[i - 1].m) {
      throw Error("compare: " + path.string() + ": duplicate month " + pairs[i].m.str());
    }
    series.months.push_back(pairs[i].m);
    series.values.push_back(pairs[i].v);
  }
  return series;
}

json conventions_json() {
  return json{
      {"sigma_divisor", "T - p"},
      {"quantile", "empirical percentile, linear interpolation between order statistics"},
      {"rng", "mt19937_64, one substream per bootstrap replication keyed by (seed, replication)"},
      {"bootstrap", "residual recursive design, centered residuals, original first p observations fixed"},
      {"cholesky", "lower triangular, pivot tolerance 1e-12 relative to the largest diagonal entry"},
      {"shock_size", "one standard deviation (one orthogonalized innovation unit)"},
  };
}

struct ScopeData {
  std::string name;
  YearMonth lo;
  YearMonth hi;
};

void write_irf_csv(const fs::path& path, const econ::IrfResult& irf,
                   const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "horizon,shock,response,point,lower,upper\n";
  const int k = static_cast<int>(names.size());
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) {
      for (int h = 0; h <= irf.horizon; ++h) {
        const auto hs = static_cast<std::size_t>(h);
        os << h << ',' << names[static_cast<std::size_t>(j)] << ','
           << names[static_cast<std::size_t>(i)] << ',' << format_real(irf.point[hs](i, j))
           << ',' << format_real(irf.lower[hs](i, j)) << ','
           << format_real(irf.upper[hs](i, j)) << '\n';
      }
    }
  }
  write_text(path, os.str());
}

// Layout: one row per period, one column per shock, shares of the
// first-ordered variable's forecast-error variance.
void write_fevd_csv(const fs::path& path, const econ::FevdTable& table,
                    const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "period";
  for (const auto& n : names) os << ',' << n;
  os << '\n';
  for (int h = 1; h <= table.horizon; ++h) {
    os << h;
    const auto& shares = table.shares[static_cast<std::size_t>(h - 1)];
    for (int j = 0; j < static_cast<int>(names.size()); ++j) {
      os << ',' << format_real(shares(0, j));
    }
    os << '\n';
  }
  write_text(path, os.str());
}

}  // namespace

void cmd_build_index(AnalysisConfig cfg, const RunOptions& options) {
  if (cfg.corpus_dir.empty()) throw Error("build-index: config needs corpus_dir");
  const fs::path out = prepare_out(options);

  progress(options, "loading corpus from " + cfg.corpus_dir.string());
  const auto corpus = load_corpus(cfg.corpus_dir);
  const Lexicon lexicon = lexicon_for(cfg);

  progress(options, "building indices over " + std::to_string(corpus.size()) + " months");
  const IndexPair indices = build_indices(corpus, lexicon, cfg.radius);

  {
    std::ostringstream os;
    write_index_csv(os, indices);
    write_text(out / "index.csv", os.str());
  }
  {
    json rows = json::array();
    for (std::size_t i = 0; i < indices.event_a.months.size(); ++i) {
      rows.push_back(index_row_json(indices, i));
    }
    write_json(out / "index.json", rows);
  }

  const auto freq = keyword_frequency(corpus, lexicon);
  json keywords = json::array();
  std::map<std::string, std::size_t> totals = {
      {"uncertainty", 0}, {"event_a", 0}, {"event_b", 0}};
  json zero_phrases = json::array();
  for (const auto& pc : freq) {
    keywords.push_back(json{{"category", category_name(pc.category)},
                            {"phrase", pc.phrase},
                            {"count", pc.count},
                            {"zero", pc.zero()}});
    totals[category_name(pc.category)] += pc.count;
    if (pc.zero()) zero_phrases.push_back(pc.phrase);
  }
  json summary = {
      {"months", {{"start", corpus.front().month.str()},
                  {"end", corpus.back().month.str()},
                  {"count", corpus.size()}}},
      {"category_totals", totals},
      {"keywords", keywords},
      {"zero_count_phrases", zero_phrases},
      {"config", cfg.to_json()},
  };
  write_json(out / "summary.json", summary);
  progress(options, "wrote " + (out / "index.csv").string());
}

void cmd_analyze(AnalysisConfig cfg, const RunOptions& options) {
  if (cfg.panel_path.empty()) throw Error("analyze: config needs panel");
  resolve_seed(cfg, options);
  const fs::path out = prepare_out(options);

  // Index series: reuse a built CSV or run the pipeline in-process.
  econ::MonthlySeries index_series;
  if (!cfg.index_path.empty()) {
    index_series = read_index_column(cfg.index_path, cfg.index_series);
  } else {
    if (cfg.corpus_dir.empty()) {
      throw Error("analyze: config needs either index or corpus_dir");
    }
    progress(options, "building index from " + cfg.corpus_dir.string());
    const auto corpus = load_corpus(cfg.corpus_dir);
    const IndexPair indices = build_indices(corpus, lexicon_for(cfg), cfg.radius);
    const IndexSeries& s =
        cfg.index_series == "brui" ? indices.event_a : indices.event_b;
    index_series.name = cfg.index_series;
    index_series.months = s.months;
    // round through the CSV's 10-significant-digit format so analysis does
    // not depend on whether the index came from a file or was built here
    index_series.values.reserve(s.normalized.size());
    for (const double v : s.normalized) {
      index_series.values.push_back(std::stod(format_real(v)));
    }
  }

  const econ::MacroPanel panel = econ::read_panel_csv(cfg.panel_path);
  if (std::find(panel.names.begin(), panel.names.end(), cfg.index_name) != panel.names.end()) {
    throw Error("analyze: panel already has a column named '" + cfg.index_name +
                "'; rename it or choose another index_name");
  }

  // Month intersection of index and panel; estimation needs it contiguous.
  std::vector<YearMonth> months;
  std::vector<double> index_values;
  {
    std::size_t ii = 0;
    for (std::size_t pi = 0; pi < panel.months.size(); ++pi) {
      while (ii < index_series.months.size() && index_series.months[ii] < panel.months[pi]) ++ii;
      if (ii < index_series.months.size() && index_series.months[ii] == panel.months[pi]) {
        months.push_back(panel.months[pi]);
        index_values.push_back(index_series.values[ii]);
      }
    }
  }
  if (months.size() < 2) throw Error("analyze: index and panel share too few months");
  for (std::size_t i = 1; i < months.size(); ++i) {
    if (months[i] - months[i - 1] != 1) {
      throw Error("analyze: index/panel month overlap has a gap after " + months[i - 1].str());
    }
  }

  std::vector<std::string> order = cfg.variable_order;
  if (order.empty()) {
    order.push_back(cfg.index_name);
    for (const auto& n : panel.names) order.push_back(n);
  }

  econ::MacroPanel merged;
  merged.months = months;
  merged.names = order;
  merged.values.resize(static_cast<Eigen::Index>(months.size()),
                       static_cast<Eigen::Index>(order.size()));
  merged.transforms.clear();
  const YearMonth first_common = months.front();
  const auto panel_row0 = static_cast<std::size_t>(first_common - panel.months.front());
  for (std::size_t c = 0; c < order.size(); ++c) {
    const auto& name = order[c];
    if (name == cfg.index_name) {
      for (std::size_t r = 0; r < months.size(); ++r) {
        merged.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            index_values[r];
      }
    } else {
      const auto it = std::find(panel.names.begin(), panel.names.end(), name);
      if (it == panel.names.end()) {
        throw Error("analyze: panel has no column '" + name + "'");
      }
      const auto pc = static_cast<Eigen::Index>(it - panel.names.begin());
      for (std::size_t r = 0; r < months.size(); ++r) {
        merged.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            panel.values(static_cast<Eigen::Index>(panel_row0 + r), pc);
      }
    }
    const auto spec = cfg.transforms.find(name);
    merged.transforms.push_back(spec != cfg.transforms.end() ? spec->second : econ::Transform{});
  }

  const econ::MacroPanel transformed = econ::transform_series(merged);

  std::vector<ScopeData> scopes;
  scopes.push_back({"full", transformed.months.front(), transformed.months.back()});
  for (const auto& sp : cfg.subperiods) scopes.push_back({sp.name, sp.lo, sp.hi});

  json scopes_json = json::object();
  int succeeded = 0;
  for (const auto& scope : scopes) {
    const std::string file_tag = sanitize(scope.name);
    json sj;
    try {
      const econ::MacroPanel sub = econ::filter_months(transformed, scope.lo, scope.hi);
      if (sub.months.empty()) throw Error("no transformed observations in range");
      int p;
      if (cfg.lag.fixed) {
        p = cfg.lag.p;
      } else {
        p = econ::select_lag(sub.values, cfg.lag.p_max, cfg.lag.criterion);
      }
      const econ::VarModel model = econ::fit_var(sub.values, p);
      if (!model.stable()) {
        std::cerr << "warning: scope '" << scope.name
                  << "': estimated VAR is unstable (spectral radius "
                  << model.spectral_radius() << "); responses may explode\n";
      }
      econ::BootstrapOptions bopt;
      bopt.reps = cfg.reps;
      bopt.level = cfg.level;
      bopt.seed = cfg.seed;
      bopt.threads = cfg.threads;
      const econ::IrfResult irf = econ::bootstrap_irf(model, sub.values, cfg.horizons, bopt);
      const econ::FevdTable table = econ::fevd(model, cfg.horizons);

      write_irf_csv(out / ("irf_" + file_tag + ".csv"), irf, transformed.names);
      write_fevd_csv(out / ("fevd_" + file_tag + ".csv"), table, transformed.names);

      sj = json{{"months", {sub.months.front().str(), sub.months.back().str()}},
                {"rows", sub.months.size()},
                {"lag", p},
                {"lag_rule", cfg.lag.fixed
                                 ? json("fixed")
                                 : json(econ::criterion_name(cfg.lag.criterion))},
                {"stable", model.stable()},
                {"spectral_radius", model.spectral_radius()},
                {"bootstrap_reps_used", irf.reps_used},
                {"bootstrap_reps_discarded", irf.reps_discarded}};
      ++succeeded;
      progress(options, "scope '" + scope.name + "': lag " + std::to_string(p) + ", " +
                            std::to_string(sub.months.size()) + " rows");
    } catch (const Error& e) {
      sj = json{{"error", e.what()},
                {"requested_range", {scope.lo.str(), scope.hi.str()}}};
      std::cerr << "warning: scope '" << scope.name << "' failed: " << e.what() << "\n";
    }
    scopes_json[scope.name] = sj;
  }

  json report = {
      {"seed", cfg.seed},
      {"variables", transformed.names},
      {"conventions", conventions_json()},
      {"scopes", scopes_json},
      {"config", cfg.to_json()},
  };
  write_json(out / "report.json", report);
  write_json(out / "effective_config.json", cfg.to_json());

  if (succeeded == 0) {
    throw Error("analyze: every scope failed; see " + (out / "report.json").string());
  }
}

void cmd_compare(const std::filesystem::path& series_a, const std::filesystem::path& series_b,
                 const RunOptions& options) {
  const fs::path out = prepare_out(options);
  const econ::MonthlySeries a = read_two_column_series(series_a);
  const econ::MonthlySeries b = read_two_column_series(series_b);
  const econ::CorrelationReport rep = econ::correlate_monthly(a, b);

  json aligned = json::array();
  for (std::size_t i = 0; i < rep.months.size(); ++i) {
    aligned.push_back(json::array({rep.months[i].str(), rep.a[i], rep.b[i]}));
  }
  json j = {
      {"series", {a.name, b.name}},
      {"files", {series_a.string(), series_b.string()}},
      {"r", rep.r},
      {"n", rep.n},
      {"overlap", {{"start", rep.overlap_start.str()}, {"end", rep.overlap_end.str()}}},
      {"aligned", aligned},
  };
  write_json(out / "compare.json", j);
  progress(options, "r = " + format_real(rep.r) + " over " + rep.overlap_start.str() + ".." +
                        rep.overlap_end.str());
}

void cmd_plot_data(const RunOptions& options) {
  const fs::path out = options.out;
  const fs::path plot = out / "plot";
  bool found = false;

  if (fs::exists(out / "index.csv")) {
    fs::create_directories(plot);
    const CsvTable table = read_csv(out / "index.csv");
    for (const std::string column : {"brui", "crui"}) {
      const auto it = std::find(table.header.begin(), table.header.end(), column);
      if (it == table.header.end()) continue;
      const auto ci = static_cast<std::size_t>(it - table.header.begin());
      std::ostringstream os;
      os << "month," << column << '\n';
      for (const auto& row : table.rows) os << row[0] << ',' << row[ci] << '\n';
      write_text(plot / ("index_" + column + ".csv"), os.str());
    }
    found = true;
  }

  if (fs::exists(out / "compare.json")) {
    fs::create_directories(plot);
    std::ifstream in(out / "compare.json");
    json j;
    in >> j;
    std::ostringstream os;
    os << "month," << sanitize(j["series"][0].get<std::string>()) << ','
       << sanitize(j["series"][1].get<std::string>()) << '\n';
    for (const auto& row : j["aligned"]) {
      os << row[0].get<std::string>() << ',' << format_real(row[1].get<double>()) << ','
         << format_real(row[2].get<double>()) << '\n';
    }
    write_text(plot / "comparison.csv", os.str());
    found = true;
  }

  std::vector<fs::path> files;
  if (fs::is_directory(out)) {
    for (const auto& entry : fs::directory_iterator(out)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    const std::string name = path.filename().string();
    if (path.extension() != ".csv") continue;
    if (name.rfind("irf_", 0) == 0) {
      // already long-form (horizon,shock,response,point,lower,upper): emit
      // the grid file sorted panel-major
      const CsvTable table = read_csv(path);
      auto rows = table.rows;
      std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return std::tie(a[1], a[2]) != std::tie(b[1], b[2])
                   ? std::tie(a[1], a[2]) < std::tie(b[1], b[2])
                   : std::stoi(a[0]) < std::stoi(b[0]);
      });
      std::ostringstream os;
      os << "shock,response,horizon,point,lower,upper\n";
      for (const auto& row : rows) {
        os << row[1] << ',' << row[2] << ',' << row[0] << ',' << row[3] << ',' << row[4] << ','
           << row[5] << '\n';
      }
      fs::create_directories(plot);
      write_text(plot / (path.stem().string() + "_grid.csv"), os.str());
      found = true;
    } else if (name.rfind("fevd_", 0) == 0) {
      const CsvTable table = read_csv(path);
      std::ostringstream os;
      os << "period,shock,share\n";
      for (const auto& row : table.rows) {
        for (std::size_t c = 1; c < table.header.size(); ++c) {
          os << row[0] << ',' << table.header[c] << ',' << row[c] << '\n';
        }
      }
      fs::create_directories(plot);
      write_text(plot / (path.stem().string() + "_stacked.csv"), os.str());
      found = true;
    }
  }

  if (!found) {
    throw Error("plot-data: no analysis outputs (index.csv, irf_*.csv, fevd_*.csv, "
                "compare.json) found in " + out.string());
  }
}

}  // namespace uix::cli
