// SPDX-License-Identifier: Apache-2.0
#include "uix/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "uix/errors.hpp"

namespace uix {

namespace {

inline bool is_word_char(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c >= 0x80;
}

}  // namespace

std::string normalize_text(std::string_view raw) {
  std::string out(raw);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    if (!is_word_char(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < n) {
      const unsigned char c = static_cast<unsigned char>(text[j]);
      if (is_word_char(c)) {
        ++j;
      } else if ((c == '-' || c == '\'') && j + 1 < n &&
                 is_word_char(static_cast<unsigned char>(text[j + 1]))) {
        j += 2;  // internal hyphen/apostrophe joins the run
      } else {
        break;
      }
    }
    out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

TokenView remove_stopwords(const std::vector<std::string>& tokens) {
  const auto& stop = english_stopwords();
  TokenView view;
  view.tokens.reserve(tokens.size());
  view.origin_map.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (stop.count(tokens[i]) == 0) {
      view.tokens.push_back(tokens[i]);
      view.origin_map.push_back(i);
    }
  }
  return view;
}

Report make_report(YearMonth month, std::string raw) {
  Report r;
  r.month = month;
  r.tokens = tokenize(normalize_text(raw));
  r.raw_text = std::move(raw);
  return r;
}

std::vector<Report> assemble_corpus(std::vector<Report> reports) {
  std::sort(reports.begin(), reports.end(),
            [](const Report& a, const Report& b) { return a.month < b.month; });
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (reports[i].total_words() == 0) {
      throw Error("corpus: report " + reports[i].month.str() +
                  " contains no words (standardization ratio undefined)");
    }
    if (i > 0 && reports[i].month == reports[i - 1].month) {
      throw Error("corpus: duplicate month " + reports[i].month.str());
    }
  }
  return reports;
}

std::vector<Report> load_corpus(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw Error("corpus: not a directory: " + dir.string());
  }
  std::vector<Report> reports;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    const std::string stem = entry.path().stem().string();
    const auto month = YearMonth::parse(stem);
    if (!month) {
      throw Error("corpus: filename is not YYYY-MM.txt: " +
                  entry.path().filename().string());
    }
    std::ifstream in(entry.path(), std::ios::binary);
    if (!in) throw Error("corpus: cannot read " + entry.path().string());
    std::ostringstream buf;
    buf << in.rdbuf();
    reports.push_back(make_report(*month, std::move(buf).str()));
  }
  return assemble_corpus(std::move(reports));
}

}  // namespace uix
