// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "uix/corpus.hpp"
#include "uix/lexicon.hpp"

namespace uix {

enum class WindowClass { EventAOnly, EventBOnly, Joint, Neither, Excluded };

/// A classified context window around one uncertainty hit. Span bounds are
/// inclusive token positions on the stopword-stripped stream, truncated at
/// stream boundaries.
struct WindowRecord {
  YearMonth report_month;
  std::size_t center = 0;
  std::size_t low = 0;
  std::size_t high = 0;
  WindowClass classification = WindowClass::Neither;
};

struct MonthlyCounts {
  YearMonth month;
  std::size_t brukn = 0;        // event-A-only windows
  std::size_t crukn = 0;        // event-B-only windows
  std::size_t joint = 0;        // windows with both
  std::size_t total_words = 0;  // from the Report, pre-stopword-removal
};

/// One monthly index: raw standardized ratios plus the max-100 rescale.
struct IndexSeries {
  std::vector<YearMonth> months;
  std::vector<double> raw;
  std::vector<double> normalized;
  std::vector<MonthlyCounts> counts;
  std::vector<double> weighted_totals;  // tbrukn (event-A series) / tcrukn (event-B)
};

struct IndexPair {
  IndexSeries event_a;
  IndexSeries event_b;
};

/// One window per Uncertainty match, spanning `radius` tokens either side
/// of the match start, truncated at stream boundaries. Classification is
/// left at Neither; report_month is unset.
std::vector<WindowRecord> extract_windows(const TokenView& view,
                                          const std::vector<Match>& matches,
                                          std::size_t radius = 10);

/// Classifies one window from the matches starting inside its span.
/// A window whose only event-A evidence is the exclusion trigger, with an
/// exclusion-context phrase in-span, is Excluded outright.
WindowClass classify_window(const WindowRecord& w, const std::vector<Match>& matches,
                            const TokenView& view, const Lexicon& lexicon);

struct JointSplit {
  double tbrukn = 0.0;
  double tcrukn = 0.0;
};

/// Allocates joint windows proportionally to the single-category counts;
/// an even split when both are zero. tbrukn + tcrukn always equals
/// brukn + crukn + joint.
JointSplit weight_joint(const MonthlyCounts& c);

/// Weighted count divided by the report's total word count.
double standardize(double weighted_count, std::size_t total_words);

/// Rescales so the maximum is exactly 100. Rejects empty and all-zero
/// input.
std::vector<double> normalize_series(const std::vector<double>& raw);

/// Full monthly pipeline: match, window, classify, exclude, count, weight,
/// standardize, then normalize each series over the whole sample. A series
/// that never fires stays all-zero; if neither series fires the build is
/// rejected.
IndexPair build_indices(const std::vector<Report>& corpus, const Lexicon& lexicon,
                        std::size_t radius = 10);

/// CSV with header month,brukn,crukn,joint,tbrukn,tcrukn,total_words,
/// brui_raw,brui,crui_raw,crui; reals carry 10 significant digits.
void write_index_csv(std::ostream& os, const IndexPair& indices);

}  // namespace uix
