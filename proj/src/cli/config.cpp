// SPDX-License-Identifier: Apache-2.0
#include "uix/cli/config.hpp"

#include <algorithm>
#include <fstream>

#include "uix/errors.hpp"

namespace uix::cli {

std::vector<Subperiod> default_subperiods() {
  return {
      {"pre", YearMonth(2012, 5), YearMonth(2016, 6)},
      {"transition", YearMonth(2016, 7), YearMonth(2020, 1)},
      {"post", YearMonth(2020, 2), YearMonth(2025, 1)},
  };
}

namespace {

YearMonth parse_month_or_throw(const std::string& s, const std::string& where) {
  const auto m = YearMonth::parse(s);
  if (!m) throw Error("config: " + where + ": bad month '" + s + "'");
  return *m;
}

}  // namespace

AnalysisConfig AnalysisConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("config: cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("config: " + path.string() + ": " + e.what());
  }
  return from_json(j);
}

AnalysisConfig AnalysisConfig::from_json(const nlohmann::json& j) {
  AnalysisConfig cfg;
  try {
    if (j.contains("corpus_dir")) cfg.corpus_dir = j.at("corpus_dir").get<std::string>();
    if (j.contains("lexicon")) cfg.lexicon_path = j.at("lexicon").get<std::string>();
    cfg.radius = j.value("radius", std::size_t{10});
    if (j.contains("panel")) cfg.panel_path = j.at("panel").get<std::string>();
    if (j.contains("index")) cfg.index_path = j.at("index").get<std::string>();
    cfg.index_name = j.value("index_name", std::string("BRUI"));
    cfg.index_series = j.value("index_series", std::string("brui"));
    if (j.contains("variable_order")) {
      for (const auto& v : j.at("variable_order")) {
        cfg.variable_order.push_back(v.get<std::string>());
      }
    }
    if (j.contains("transforms")) {
      for (const auto& [name, spec] : j.at("transforms").items()) {
        econ::Transform t;
        t.log = spec.value("log", false);
        t.diff = spec.value("diff", 1);
        cfg.transforms[name] = t;
      }
    }
    if (j.contains("lag")) {
      const auto& lag = j.at("lag");
      if (lag.contains("fixed")) {
        cfg.lag.fixed = true;
        cfg.lag.p = lag.at("fixed").get<int>();
      } else {
        cfg.lag.fixed = false;
        cfg.lag.criterion = econ::parse_criterion(lag.value("criterion", std::string("aic")));
        cfg.lag.p_max = lag.value("max", 6);
      }
    }
    cfg.horizons = j.value("horizons", 10);
    if (j.contains("bootstrap")) {
      const auto& b = j.at("bootstrap");
      cfg.reps = b.value("reps", 999);
      cfg.level = b.value("level", 90.0);
      if (b.contains("seed")) {
        cfg.seed = b.at("seed").get<std::uint64_t>();
        cfg.seed_set = true;
      }
      cfg.threads = b.value("threads", 1);
    }
    if (j.contains("subperiods")) {
      for (const auto& [name, range] : j.at("subperiods").items()) {
        if (!range.is_array() || range.size() != 2) {
          throw Error("config: subperiod '" + name + "' must be [\"YYYY-MM\", \"YYYY-MM\"]");
        }
        Subperiod sp;
        sp.name = name;
        sp.lo = parse_month_or_throw(range[0].get<std::string>(), "subperiod " + name);
        sp.hi = parse_month_or_throw(range[1].get<std::string>(), "subperiod " + name);
        if (sp.hi < sp.lo) {
          throw Error("config: subperiod '" + name + "' range is reversed");
        }
        cfg.subperiods.push_back(std::move(sp));
      }
    } else {
      cfg.subperiods = default_subperiods();
    }
    std::sort(cfg.subperiods.begin(), cfg.subperiods.end(),
              [](const Subperiod& a, const Subperiod& b) { return a.name < b.name; });
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

void AnalysisConfig::validate() const {
  if (radius < 1) throw Error("config: radius must be >= 1");
  if (reps < 1) throw Error("config: bootstrap reps must be >= 1");
  if (!(level > 0.0 && level < 100.0)) throw Error("config: bootstrap level must lie in (0, 100)");
  if (horizons < 1) throw Error("config: horizons must be >= 1");
  if (lag.fixed) {
    if (lag.p < 1) throw Error("config: fixed lag must be >= 1");
  } else if (lag.p_max < 1) {
    throw Error("config: lag.max must be >= 1");
  }
  if (index_series != "brui" && index_series != "crui") {
    throw Error("config: index_series must be 'brui' or 'crui'");
  }
  if (!variable_order.empty() && variable_order.front() != index_name) {
    throw Error("config: variable_order must list the index variable '" + index_name +
                "' first (it defines the identification ordering)");
  }
  for (std::size_t i = 0; i < variable_order.size(); ++i) {
    for (std::size_t j = i + 1; j < variable_order.size(); ++j) {
      if (variable_order[i] == variable_order[j]) {
        throw Error("config: variable_order lists '" + variable_order[i] + "' twice");
      }
    }
  }
  for (std::size_t i = 0; i < subperiods.size(); ++i) {
    if (subperiods[i].name == "full") {
      throw Error("config: subperiod name 'full' is reserved for the full sample");
    }
    for (std::size_t j = i + 1; j < subperiods.size(); ++j) {
      if (subperiods[i].name == subperiods[j].name) {
        throw Error("config: duplicate subperiod name '" + subperiods[i].name + "'");
      }
    }
  }
}

nlohmann::json AnalysisConfig::to_json() const {
  nlohmann::json j;
  if (!corpus_dir.empty()) j["corpus_dir"] = corpus_dir.string();
  if (!lexicon_path.empty()) j["lexicon"] = lexicon_path.string();
  j["radius"] = radius;
  if (!panel_path.empty()) j["panel"] = panel_path.string();
  if (!index_path.empty()) j["index"] = index_path.string();
  j["index_name"] = index_name;
  j["index_series"] = index_series;
  if (!variable_order.empty()) j["variable_order"] = variable_order;
  nlohmann::json transforms_json = nlohmann::json::object();
  for (const auto& [name, t] : transforms) {
    transforms_json[name] = {{"log", t.log}, {"diff", t.diff}};
  }
  j["transforms"] = transforms_json;
  if (lag.fixed) {
    j["lag"] = {{"fixed", lag.p}};
  } else {
    j["lag"] = {{"criterion", econ::criterion_name(lag.criterion)}, {"max", lag.p_max}};
  }
  j["horizons"] = horizons;
  nlohmann::json bootstrap = {{"reps", reps}, {"level", level}, {"threads", threads}};
  if (seed_set) bootstrap["seed"] = seed;
  j["bootstrap"] = bootstrap;
  nlohmann::json sp = nlohmann::json::object();
  for (const auto& s : subperiods) {
    sp[s.name] = {s.lo.str(), s.hi.str()};
  }
  j["subperiods"] = sp;
  return j;
}

}  // namespace uix::cli
