// SPDX-License-Identifier: Apache-2.0
#include "uix/indexer.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "uix/errors.hpp"

namespace uix {

namespace {

bool slice_equals(const TokenView& view, std::size_t pos, const std::vector<std::string>& canon) {
  if (pos + canon.size() > view.tokens.size()) return false;
  for (std::size_t k = 0; k < canon.size(); ++k) {
    if (view.tokens[pos + k] != canon[k]) return false;
  }
  return true;
}

bool context_in_span(const WindowRecord& w, const TokenView& view, const Lexicon& lexicon) {
  for (std::size_t pos = w.low; pos <= w.high && pos < view.tokens.size(); ++pos) {
    for (const auto& ctx : lexicon.exclusion_context()) {
      if (slice_equals(view, pos, ctx.canon)) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<WindowRecord> extract_windows(const TokenView& view,
                                          const std::vector<Match>& matches,
                                          std::size_t radius) {
  std::vector<WindowRecord> out;
  if (view.tokens.empty()) return out;
  const std::size_t last = view.tokens.size() - 1;
  for (const auto& m : matches) {
    if (m.category != Category::Uncertainty) continue;
    WindowRecord w;
    w.center = m.position;
    w.low = m.position >= radius ? m.position - radius : 0;
    w.high = std::min(last, m.position + radius);
    out.push_back(w);
  }
  return out;
}

WindowClass classify_window(const WindowRecord& w, const std::vector<Match>& matches,
                            const TokenView& view, const Lexicon& lexicon) {
  bool any_a = false;
  bool any_b = false;
  bool a_beyond_trigger = false;  // event-A evidence other than the trigger phrase
  const auto& trigger = lexicon.exclusion_trigger().canon;

  for (const auto& m : matches) {
    if (m.position < w.low || m.position > w.high) continue;
    if (m.category == Category::EventA) {
      any_a = true;
      const auto& canon = lexicon.entries(Category::EventA)[m.entry].canon;
      if (canon != trigger) a_beyond_trigger = true;
    } else if (m.category == Category::EventB) {
      any_b = true;
    }
  }

  if (any_a && !a_beyond_trigger && context_in_span(w, view, lexicon)) {
    return WindowClass::Excluded;
  }
  if (any_a && any_b) return WindowClass::Joint;
  if (any_a) return WindowClass::EventAOnly;
  if (any_b) return WindowClass::EventBOnly;
  return WindowClass::Neither;
}

JointSplit weight_joint(const MonthlyCounts& c) {
  const double b = static_cast<double>(c.brukn);
  const double k = static_cast<double>(c.crukn);
  const double j = static_cast<double>(c.joint);
  if (b + k > 0.0) {
    return {b + j * b / (b + k), k + j * k / (b + k)};
  }
  return {j / 2.0, j / 2.0};  // no single-category mass: split evenly
}

double standardize(double weighted_count, std::size_t total_words) {
  if (total_words == 0) {
    throw Error("indexer: standardization ratio undefined for a zero-word report");
  }
  return weighted_count / static_cast<double>(total_words);
}

std::vector<double> normalize_series(const std::vector<double>& raw) {
  if (raw.empty()) throw Error("indexer: cannot normalize an empty series");
  double max = 0.0;
  for (double v : raw) {
    if (v < 0.0) throw Error("indexer: negative raw index value");
    max = std::max(max, v);
  }
  if (!(max > 0.0)) {
    throw Error("indexer: all-zero series cannot be normalized (no keyword ever matched)");
  }
  const double scale = 100.0 / max;
  std::vector<double> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out[i] = raw[i] == max ? 100.0 : raw[i] * scale;
  }
  return out;
}

IndexPair build_indices(const std::vector<Report>& corpus, const Lexicon& lexicon,
                        std::size_t radius) {
  if (radius < 1) throw Error("indexer: window radius must be >= 1");
  if (corpus.empty()) throw Error("indexer: empty corpus");

  IndexPair result;
  auto& a = result.event_a;
  auto& b = result.event_b;

  for (const auto& report : corpus) {
    const TokenView view = remove_stopwords(report.tokens);
    const auto matches = match_ngrams(view, lexicon);
    auto windows = extract_windows(view, matches, radius);

    MonthlyCounts counts;
    counts.month = report.month;
    counts.total_words = report.total_words();
    for (auto& w : windows) {
      w.report_month = report.month;
      w.classification = classify_window(w, matches, view, lexicon);
      switch (w.classification) {
        case WindowClass::EventAOnly: ++counts.brukn; break;
        case WindowClass::EventBOnly: ++counts.crukn; break;
        case WindowClass::Joint: ++counts.joint; break;
        default: break;
      }
    }

    const JointSplit split = weight_joint(counts);
    a.months.push_back(report.month);
    b.months.push_back(report.month);
    a.counts.push_back(counts);
    b.counts.push_back(counts);
    a.weighted_totals.push_back(split.tbrukn);
    b.weighted_totals.push_back(split.tcrukn);
    a.raw.push_back(standardize(split.tbrukn, report.total_words()));
    b.raw.push_back(standardize(split.tcrukn, report.total_words()));
  }

  auto has_mass = [](const std::vector<double>& raw) {
    return std::any_of(raw.begin(), raw.end(), [](double v) { return v > 0.0; });
  };
  const bool a_fired = has_mass(a.raw);
  const bool b_fired = has_mass(b.raw);
  if (!a_fired && !b_fired) {
    throw Error("indexer: no uncertainty window matched any event keyword; "
                "both index series are zero");
  }
  a.normalized = a_fired ? normalize_series(a.raw) : std::vector<double>(a.raw.size(), 0.0);
  b.normalized = b_fired ? normalize_series(b.raw) : std::vector<double>(b.raw.size(), 0.0);
  return result;
}

void write_index_csv(std::ostream& os, const IndexPair& indices) {
  const auto& a = indices.event_a;
  const auto& b = indices.event_b;
  os << "month,brukn,crukn,joint,tbrukn,tcrukn,total_words,brui_raw,brui,crui_raw,crui\n";
  char buf[512];
  for (std::size_t i = 0; i < a.months.size(); ++i) {
    const auto& c = a.counts[i];
    std::snprintf(buf, sizeof(buf), "%s,%zu,%zu,%zu,%.10g,%.10g,%zu,%.10g,%.10g,%.10g,%.10g\n",
                  a.months[i].str().c_str(), c.brukn, c.crukn, c.joint,
                  a.weighted_totals[i], b.weighted_totals[i], c.total_words,
                  a.raw[i], a.normalized[i], b.raw[i], b.normalized[i]);
    os << buf;
  }
}

}  // namespace uix
