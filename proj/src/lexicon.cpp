// SPDX-License-Identifier: Apache-2.0
#include "uix/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "uix/errors.hpp"

namespace uix {

namespace {

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

Lexicon::Entry make_entry(const std::string& phrase) {
  auto tokens = tokenize(normalize_text(phrase));
  if (tokens.empty()) {
    throw Error("lexicon: phrase tokenizes to nothing: \"" + phrase + "\"");
  }
  return {canonicalize_phrase(std::move(tokens)), normalize_text(phrase)};
}

}  // namespace

std::vector<std::string> canonicalize_phrase(std::vector<std::string> phrase) {
  const auto& stop = english_stopwords();
  std::vector<std::string> out;
  out.reserve(phrase.size());
  for (auto& t : phrase) {
    if (stop.count(t) == 0) out.push_back(std::move(t));
  }
  if (out.empty()) return phrase;  // all-stopword phrase matches its surface form
  return out;
}

Lexicon Lexicon::from_lists(std::vector<std::string> uncertainty,
                            std::vector<std::string> event_a,
                            std::vector<std::string> event_b,
                            std::string exclusion_trigger,
                            std::vector<std::string> exclusion_context) {
  Lexicon lex;
  std::array<std::vector<std::string>*, 3> lists = {&uncertainty, &event_a, &event_b};

  // Tokenized surface form -> category, for cross-category rejection.
  std::unordered_map<std::string, int> seen;

  for (int c = 0; c < 3; ++c) {
    const auto cat = static_cast<Category>(c);
    if (lists[c]->empty()) {
      throw Error(std::string("lexicon: category '") + category_name(cat) + "' is empty");
    }
    // Canonical form -> entry index, for within-category dedup.
    std::map<std::vector<std::string>, std::size_t> canon_index;
    for (auto& phrase : *lists[c]) {
      auto entry = make_entry(phrase);
      const std::string surface = join(tokenize(normalize_text(phrase)));
      auto [it, inserted] = seen.emplace(surface, c);
      if (!inserted && it->second != c) {
        throw Error("lexicon: phrase \"" + surface + "\" appears in both '" +
                    category_name(static_cast<Category>(it->second)) + "' and '" +
                    category_name(cat) + "'");
      }
      auto found = canon_index.find(entry.canon);
      std::size_t idx;
      if (found == canon_index.end()) {
        idx = lex.entries_[c].size();
        canon_index.emplace(entry.canon, idx);
        lex.entries_[c].push_back(std::move(entry));
      } else {
        idx = found->second;
      }
      lex.source_[c].push_back(normalize_text(phrase));
      lex.source_entry_[c].push_back(idx);
    }
  }

  lex.trigger_ = make_entry(exclusion_trigger);
  for (const auto& phrase : exclusion_context) {
    lex.context_.push_back(make_entry(phrase));
  }
  return lex;
}

Lexicon load_lexicon(const std::filesystem::path& config) {
  std::ifstream in(config);
  if (!in) throw Error("lexicon: cannot open " + config.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("lexicon: " + config.string() + ": " + e.what());
  }

  // A config may override any subset of the categories; absent keys keep
  // the bundled default lists.
  auto phrase_list = [&](const char* key, Category fallback) {
    if (!j.contains(key)) return default_lexicon().source_phrases(fallback);
    std::vector<std::string> out;
    for (const auto& item : j.at(key)) out.push_back(item.get<std::string>());
    return out;
  };

  std::string trigger = j.value("exclusion_trigger", std::string("referendum"));
  std::vector<std::string> context = {"scotland", "scottish"};
  if (j.contains("exclusion_context")) {
    context.clear();
    for (const auto& item : j.at("exclusion_context")) context.push_back(item.get<std::string>());
  }

  return Lexicon::from_lists(phrase_list("uncertainty", Category::Uncertainty),
                             phrase_list("event_a", Category::EventA),
                             phrase_list("event_b", Category::EventB),
                             std::move(trigger), std::move(context));
}

std::vector<Match> match_ngrams(const TokenView& view, const Lexicon& lexicon) {
  struct Candidate {
    Category category;
    std::size_t entry;
  };
  // First token -> candidate entries, so each stream position probes only
  // phrases that can start there.
  std::unordered_map<std::string_view, std::vector<Candidate>> heads;
  for (int c = 0; c < 3; ++c) {
    const auto cat = static_cast<Category>(c);
    const auto& entries = lexicon.entries(cat);
    for (std::size_t e = 0; e < entries.size(); ++e) {
      heads[entries[e].canon.front()].push_back({cat, e});
    }
  }

  std::vector<Match> out;
  const std::size_t n = view.tokens.size();
  for (std::size_t pos = 0; pos < n; ++pos) {
    auto it = heads.find(view.tokens[pos]);
    if (it == heads.end()) continue;
    // Longest match per category at this start.
    std::array<std::size_t, 3> best_len = {0, 0, 0};
    std::array<std::size_t, 3> best_entry = {0, 0, 0};
    for (const auto& cand : it->second) {
      const auto& canon = lexicon.entries(cand.category)[cand.entry].canon;
      if (canon.size() > n - pos) continue;
      bool ok = true;
      for (std::size_t k = 1; k < canon.size(); ++k) {
        if (view.tokens[pos + k] != canon[k]) { ok = false; break; }
      }
      const int c = static_cast<int>(cand.category);
      if (ok && canon.size() > best_len[c]) {
        best_len[c] = canon.size();
        best_entry[c] = cand.entry;
      }
    }
    for (int c = 0; c < 3; ++c) {
      if (best_len[c] > 0) {
        out.push_back({static_cast<Category>(c), pos, best_len[c], best_entry[c]});
      }
    }
  }
  return out;  // built position-major, category-minor: already sorted
}

std::vector<PhraseCount> keyword_frequency(const std::vector<Report>& corpus,
                                           const Lexicon& lexicon) {
  std::array<std::vector<std::size_t>, 3> entry_counts;
  for (int c = 0; c < 3; ++c) {
    entry_counts[c].assign(lexicon.entries(static_cast<Category>(c)).size(), 0);
  }
  for (const auto& report : corpus) {
    const auto view = remove_stopwords(report.tokens);
    for (const auto& m : match_ngrams(view, lexicon)) {
      ++entry_counts[static_cast<int>(m.category)][m.entry];
    }
  }
  std::vector<PhraseCount> out;
  for (int c = 0; c < 3; ++c) {
    const auto cat = static_cast<Category>(c);
    const auto& phrases = lexicon.source_phrases(cat);
    const auto& mapping = lexicon.source_entry(cat);
    for (std::size_t i = 0; i < phrases.size(); ++i) {
      out.push_back({cat, phrases[i], entry_counts[c][mapping[i]]});
    }
  }
  return out;
}

}  // namespace uix
