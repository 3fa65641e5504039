// SPDX-License-Identifier: Apache-2.0
#include "support/synthetic.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "uix/csv.hpp"
#include "uix/errors.hpp"

namespace synth {

namespace {

// Filler vocabulary: no lexicon keywords, plus common stopwords so the
// stripped stream differs from the raw one.
const std::vector<std::string>& filler() {
  static const std::vector<std::string> words = {
      "the",      "a",         "of",       "in",        "and",      "growth",
      "report",   "quarter",   "sector",   "figures",   "survey",   "demand",
      "supply",   "prices",    "firms",    "output",    "policy",   "markets",
      "forecast", "activity",  "spending", "consumers", "industry", "levels",
      "data",     "economy",   "region",   "services",  "housing",  "energy",
      "labour",   "wages",     "profits",  "revenue",   "balance",  "deficit",
      "measures", "conditions"};
  return words;
}

const std::vector<std::string>& uncertainty_words() {
  static const std::vector<std::string> words = {
      "uncertainty", "uncertain", "instability", "volatile", "fear",
      "tension",     "unclear",   "worry",       "unsettled"};
  return words;
}

const std::vector<std::string>& event_a_phrases() {
  static const std::vector<std::string> words = {
      "brexit",         "customs union",      "exit from the EU", "single market",
      "article 50",     "withdrawal agreement", "transition period", "Brexit-related",
      "leave the EU",   "referendum"};
  return words;
}

const std::vector<std::string>& event_b_words() {
  static const std::vector<std::string> words = {
      "pandemic", "covid-19", "lockdown", "coronavirus", "vaccine", "quarantine"};
  return words;
}

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

std::string maybe_upper(std::mt19937_64& rng, std::string word) {
  const int roll = std::uniform_int_distribution<int>(0, 9)(rng);
  if (roll == 0) {
    for (char& c : word) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  } else if (roll == 1 && !word.empty()) {
    word[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(word[0])));
  }
  return word;
}

}  // namespace

std::vector<MonthText> make_corpus(const CorpusOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<MonthText> out;
  uix::YearMonth month = options.start;
  for (int m = 0; m < options.months; ++m, ++month) {
    const int slots =
        std::uniform_int_distribution<int>(options.min_tokens, options.max_tokens)(rng);
    std::ostringstream text;
    int col = 0;
    auto emit = [&](const std::string& word) {
      if (col > 0) text << (col % 12 == 0 ? ",\n" : " ");
      text << word;
      ++col;
    };
    for (int s = 0; s < slots; ++s) {
      const double roll = unit(rng);
      if (roll < options.uncertainty_rate) {
        emit(maybe_upper(rng, pick(rng, uncertainty_words())));
      } else if (roll < options.uncertainty_rate + options.event_a_rate) {
        emit(maybe_upper(rng, pick(rng, event_a_phrases())));
      } else if (roll < options.uncertainty_rate + options.event_a_rate + options.event_b_rate) {
        emit(maybe_upper(rng, pick(rng, event_b_words())));
      } else if (roll < options.uncertainty_rate + options.event_a_rate +
                            options.event_b_rate + options.exclusion_rate) {
        emit("referendum");
        emit(pick(rng, filler()));
        emit(unit(rng) < 0.5 ? "scottish" : "scotland");
      } else {
        emit(maybe_upper(rng, pick(rng, filler())));
      }
      if (unit(rng) < 0.08) text << '.';
    }
    out.push_back({month, text.str() + "\n"});
  }
  return out;
}

void write_corpus(const std::vector<MonthText>& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& m : corpus) {
    std::ofstream out(dir / (m.month.str() + ".txt"), std::ios::binary);
    if (!out) throw uix::Error("synthetic: cannot write corpus file in " + dir.string());
    out << m.text;
  }
}

std::string make_panel_csv(const std::vector<uix::YearMonth>& months,
                           const std::vector<std::string>& names, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> shock(0.0, 0.02);
  std::ostringstream os;
  os << "month";
  for (const auto& n : names) os << ',' << n;
  os << '\n';
  std::vector<double> level(names.size(), 0.0);
  for (const auto& m : months) {
    os << m.str();
    for (double& l : level) {
      l = 0.95 * l + shock(rng);
      os << ',' << uix::format_real(100.0 * std::exp(l));
    }
    os << '\n';
  }
  return os.str();
}

Eigen::MatrixXd simulate_var(const VarProcess& process, int T, int burn, std::mt19937_64& rng) {
  const int k = static_cast<int>(process.intercept.size());
  const int p = static_cast<int>(process.coef.size());
  const Eigen::LLT<Eigen::MatrixXd> llt(process.sigma);
  const Eigen::MatrixXd L = llt.matrixL();
  std::normal_distribution<double> normal(0.0, 1.0);

  const int total = T + burn + p;
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(total, k);
  Eigen::VectorXd z(k);
  for (int t = p; t < total; ++t) {
    for (int i = 0; i < k; ++i) z(i) = normal(rng);
    Eigen::VectorXd v = process.intercept + L * z;
    for (int l = 1; l <= p; ++l) {
      v += process.coef[static_cast<std::size_t>(l - 1)] * y.row(t - l).transpose();
    }
    y.row(t) = v.transpose();
  }
  return y.bottomRows(T);
}

VarProcess random_stable_var(int k, int p, double target_radius, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  VarProcess process;
  process.intercept = Eigen::VectorXd::Zero(k);
  for (int l = 0; l < p; ++l) {
    Eigen::MatrixXd a(k, k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) a(i, j) = 0.5 * normal(rng) / (l + 1);
    }
    process.coef.push_back(a);
  }

  // companion spectral radius, then rescale A_i by s^i so the radius hits
  // the target
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(k * p, k * p);
  for (int l = 0; l < p; ++l) companion.block(0, l * k, k, k) = process.coef[l];
  if (p > 1) {
    companion.block(k, 0, k * (p - 1), k * (p - 1)) =
        Eigen::MatrixXd::Identity(k * (p - 1), k * (p - 1));
  }
  const double radius = companion.eigenvalues().cwiseAbs().maxCoeff();
  if (radius > 0.0) {
    const double s = target_radius / radius;
    double factor = s;
    for (int l = 0; l < p; ++l) {
      process.coef[l] *= factor;
      factor *= s;
    }
  }

  Eigen::MatrixXd g(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) g(i, j) = normal(rng);
  }
  process.sigma = g * g.transpose() + 0.1 * Eigen::MatrixXd::Identity(k, k);
  return process;
}

}  // namespace synth
