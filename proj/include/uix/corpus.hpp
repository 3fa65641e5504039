// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "uix/month.hpp"

namespace uix {

/// One month's document after normalization and tokenization.
/// total_words is the token count before stopword removal and is the
/// denominator of the per-report standardization ratio.
struct Report {
  YearMonth month;
  std::string raw_text;
  std::vector<std::string> tokens;  // lowercased, punctuation-trimmed

  std::size_t total_words() const { return tokens.size(); }
};

/// A stopword-stripped view of a Report's tokens. origin_map[i] is the
/// position of tokens[i] in the parent Report's token list.
struct TokenView {
  std::vector<std::string> tokens;
  std::vector<std::size_t> origin_map;

  std::size_t size() const { return tokens.size(); }
};

/// Lowercases ASCII letters; all other bytes pass through unchanged.
std::string normalize_text(std::string_view raw);

/// Splits lowercased text into tokens: maximal runs of letters/digits with
/// internal hyphens and apostrophes kept ("brexit-related", "covid-19",
/// "uk's"); surrounding punctuation and whitespace are discarded. Bytes
/// >= 0x80 are treated as letters so UTF-8 words survive intact.
std::vector<std::string> tokenize(std::string_view text);

/// The bundled 179-word English stopword list (see data/stopwords_en.txt).
const std::unordered_set<std::string>& english_stopwords();
const std::vector<std::string>& english_stopwords_ordered();

/// Subsequence of tokens not in the bundled stopword set, with original
/// positions recorded.
TokenView remove_stopwords(const std::vector<std::string>& tokens);

/// Builds a Report from raw text: normalize, tokenize.
Report make_report(YearMonth month, std::string raw);

/// Loads every YYYY-MM.txt file in the directory, one Report per month,
/// sorted by month. Rejects duplicate months, unparseable .txt filenames,
/// and reports that tokenize to zero words.
std::vector<Report> load_corpus(const std::filesystem::path& dir);

/// Enforces the corpus invariants (unique months, nonzero word counts) on
/// an arbitrary report collection and returns it sorted by month.
std::vector<Report> assemble_corpus(std::vector<Report> reports);

}  // namespace uix
