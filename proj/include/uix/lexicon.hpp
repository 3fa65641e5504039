// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "uix/corpus.hpp"

namespace uix {

enum class Category { Uncertainty = 0, EventA = 1, EventB = 2 };

inline const char* category_name(Category c) {
  switch (c) {
    case Category::Uncertainty: return "uncertainty";
    case Category::EventA: return "event_a";
    case Category::EventB: return "event_b";
  }
  return "?";
}

/// Removes stopwords from a tokenized phrase; a phrase that would vanish
/// entirely keeps its original tokens.
std::vector<std::string> canonicalize_phrase(std::vector<std::string> phrase);

/// Three categorized phrase sets plus the referendum-confusion exclusion
/// rule. Phrases are matched on the stopword-stripped token stream, so each
/// phrase is stored in canonical (stopword-stripped) form; phrases whose
/// canonical forms collide within a category share one match entry.
class Lexicon {
public:
  struct Entry {
    std::vector<std::string> canon;  // tokens matched against the stream
    std::string phrase;              // representative source phrase
  };

  /// Builds and validates a lexicon from raw phrase lists. Rejects phrases
  /// appearing in two categories and empty categories.
  static Lexicon from_lists(std::vector<std::string> uncertainty,
                            std::vector<std::string> event_a,
                            std::vector<std::string> event_b,
                            std::string exclusion_trigger = "referendum",
                            std::vector<std::string> exclusion_context = {"scotland", "scottish"});

  const std::vector<std::string>& source_phrases(Category c) const {
    return source_[static_cast<int>(c)];
  }
  const std::vector<Entry>& entries(Category c) const {
    return entries_[static_cast<int>(c)];
  }
  /// Index into entries(c) for each source phrase.
  const std::vector<std::size_t>& source_entry(Category c) const {
    return source_entry_[static_cast<int>(c)];
  }

  const Entry& exclusion_trigger() const { return trigger_; }
  const std::vector<Entry>& exclusion_context() const { return context_; }

private:
  std::array<std::vector<std::string>, 3> source_;
  std::array<std::vector<Entry>, 3> entries_;
  std::array<std::vector<std::size_t>, 3> source_entry_;
  Entry trigger_;
  std::vector<Entry> context_;
};

/// One exact n-gram hit on the stopword-stripped stream.
struct Match {
  Category category;
  std::size_t position;  // start index in the TokenView
  std::size_t length;    // canonical n-gram length, >= 1
  std::size_t entry;     // index into lexicon.entries(category)
};

/// Loads a lexicon from a JSON config file with keys `uncertainty`,
/// `event_a`, `event_b` and optional `exclusion_trigger` /
/// `exclusion_context`.
Lexicon load_lexicon(const std::filesystem::path& config);

/// The bundled default lexicon (mirrored verbatim in data/default_lexicon.json).
const Lexicon& default_lexicon();

/// Every position where a canonical lexicon phrase equals the n-gram
/// starting there. At each start only the longest match per category is
/// kept; matches may overlap across categories. Sorted by position, then
/// category.
std::vector<Match> match_ngrams(const TokenView& view, const Lexicon& lexicon);

struct PhraseCount {
  Category category;
  std::string phrase;   // source phrase as listed in the lexicon
  std::size_t count;    // total matches of its canonical form
  bool zero() const { return count == 0; }
};

/// Total match count per source phrase across a corpus. Phrases sharing a
/// canonical form report the shared count.
std::vector<PhraseCount> keyword_frequency(const std::vector<Report>& corpus,
                                           const Lexicon& lexicon);

}  // namespace uix
