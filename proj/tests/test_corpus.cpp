// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "uix/corpus.hpp"
#include "uix/errors.hpp"

using namespace uix;
namespace fs = std::filesystem;

namespace {

fs::path make_temp_dir(const std::string& tag) {
  const auto dir = fs::temp_directory_path() / ("uix_test_" + tag + "_" +
                                                std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

// Independent character-level scanner used to cross-check tokenize: walks
// the string and grows a token only while the stated rules allow it.
std::vector<std::string> reference_tokenize(const std::string& text) {
  auto word = [](unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c >= 0x80;
  };
  std::vector<std::string> out;
  std::string current;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (word(c)) {
      current += text[i];
    } else if ((c == '-' || c == '\'') && !current.empty() && i + 1 < text.size() &&
               word(static_cast<unsigned char>(text[i + 1]))) {
      current += text[i];
    } else if (!current.empty()) {
      out.push_back(current);
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

std::string random_text(std::mt19937& rng, std::size_t len) {
  static const std::string alphabet =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 .,-'!?;:()\t\n";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string s;
  for (std::size_t i = 0; i < len; ++i) s += alphabet[pick(rng)];
  return s;
}

}  // namespace

TEST_CASE("normalize_text folds ASCII case only") {
  CHECK(normalize_text("Brexit Uncertainty") == "brexit uncertainty");
  CHECK(normalize_text("COVID-19") == "covid-19");
  CHECK(normalize_text("") == "");
  CHECK(normalize_text("already lower 42") == "already lower 42");
}

TEST_CASE("normalize_text is idempotent") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const std::string s = random_text(rng, 120);
    const std::string once = normalize_text(s);
    CHECK(normalize_text(once) == once);
  }
}

TEST_CASE("tokenize strips punctuation and keeps internal joins") {
  CHECK(tokenize("exit the eu.") == std::vector<std::string>{"exit", "the", "eu"});
  CHECK(tokenize("brexit-related, uncertainty") ==
        std::vector<std::string>{"brexit-related", "uncertainty"});
  CHECK(tokenize("article 50") == std::vector<std::string>{"article", "50"});
  CHECK(tokenize("uk's withdrawal") == std::vector<std::string>{"uk's", "withdrawal"});
  CHECK(tokenize("covid-19") == std::vector<std::string>{"covid-19"});
  CHECK(tokenize("--dash-- 'quote'") == std::vector<std::string>{"dash", "quote"});
  CHECK(tokenize("a--b") == std::vector<std::string>{"a", "b"});
  CHECK(tokenize("trailing-") == std::vector<std::string>{"trailing"});
  CHECK(tokenize("") == std::vector<std::string>{});
  CHECK(tokenize("  .,;:!  ") == std::vector<std::string>{});
}

TEST_CASE("tokenize agrees with a character-level reference scanner") {
  std::mt19937 rng(11);
  for (int i = 0; i < 500; ++i) {
    const std::string s = normalize_text(random_text(rng, 80));
    CHECK(tokenize(s) == reference_tokenize(s));
  }
}

TEST_CASE("stopword list is the fixed 179-word set") {
  CHECK(english_stopwords_ordered().size() == 179);
  CHECK(english_stopwords().size() == 179);
  CHECK(english_stopwords().count("the") == 1);
  CHECK(english_stopwords().count("a") == 1);
  CHECK(english_stopwords().count("is") == 1);
  CHECK(english_stopwords().count("eu") == 0);
}

TEST_CASE("bundled stopword file matches the built-in list") {
  std::ifstream in(fs::path(UIX_SOURCE_DIR) / "data" / "stopwords_en.txt");
  REQUIRE(in.good());
  std::vector<std::string> from_file;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) from_file.push_back(line);
  }
  CHECK(from_file == english_stopwords_ordered());
}

TEST_CASE("remove_stopwords keeps positions") {
  const auto view = remove_stopwords({"exit", "the", "eu"});
  CHECK(view.tokens == std::vector<std::string>{"exit", "eu"});
  CHECK(view.origin_map == std::vector<std::size_t>{0, 2});

  CHECK(remove_stopwords({}).tokens.empty());
  const auto all_stop = remove_stopwords({"the", "a", "is"});
  CHECK(all_stop.tokens.empty());
  CHECK(all_stop.origin_map.empty());
}

TEST_CASE("remove_stopwords properties on random token streams") {
  std::mt19937 rng(13);
  for (int i = 0; i < 300; ++i) {
    const auto tokens = tokenize(normalize_text(random_text(rng, 150)));
    const auto view = remove_stopwords(tokens);
    for (const auto& t : view.tokens) CHECK(english_stopwords().count(t) == 0);
    REQUIRE(view.tokens.size() == view.origin_map.size());
    for (std::size_t k = 0; k < view.tokens.size(); ++k) {
      if (k > 0) CHECK(view.origin_map[k] > view.origin_map[k - 1]);
      REQUIRE(view.origin_map[k] < tokens.size());
      CHECK(tokens[view.origin_map[k]] == view.tokens[k]);
    }
  }
}

TEST_CASE("make_report counts words before stopword removal") {
  const auto report = make_report(YearMonth(2016, 6), "Exit from the EU. Uncertainty!");
  CHECK(report.tokens == std::vector<std::string>{"exit", "from", "the", "eu", "uncertainty"});
  CHECK(report.total_words() == 5);
  const auto view = remove_stopwords(report.tokens);
  CHECK(report.total_words() == 5);  // invariant under removal
  CHECK(view.tokens == std::vector<std::string>{"exit", "eu", "uncertainty"});
}

TEST_CASE("load_corpus reads month-named files in order") {
  const auto dir = make_temp_dir("corpus_ok");
  write_file(dir / "2012-06.txt", "second month report");
  write_file(dir / "2012-05.txt", "first month report");
  write_file(dir / "notes.md", "ignored");
  const auto corpus = load_corpus(dir);
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].month == YearMonth(2012, 5));
  CHECK(corpus[1].month == YearMonth(2012, 6));
  fs::remove_all(dir);
}

TEST_CASE("load_corpus rejects duplicate months") {
  const auto dir = make_temp_dir("corpus_dup");
  write_file(dir / "2016-06.txt", "report one");
  write_file(dir / "2016-6.txt", "report two");
  CHECK_THROWS_WITH_AS(load_corpus(dir), doctest::Contains("duplicate month 2016-06"), Error);
  fs::remove_all(dir);
}

TEST_CASE("load_corpus rejects empty reports") {
  const auto dir = make_temp_dir("corpus_empty");
  write_file(dir / "2020-03.txt", "");
  CHECK_THROWS_WITH_AS(load_corpus(dir), doctest::Contains("2020-03"), Error);
  fs::remove_all(dir);

  const auto dir2 = make_temp_dir("corpus_punct");
  write_file(dir2 / "2020-04.txt", "... !!! ...");
  CHECK_THROWS_AS(load_corpus(dir2), Error);
  fs::remove_all(dir2);
}

TEST_CASE("load_corpus rejects unparseable filenames") {
  const auto dir = make_temp_dir("corpus_badname");
  write_file(dir / "report-may.txt", "words here");
  CHECK_THROWS_WITH_AS(load_corpus(dir), doctest::Contains("report-may.txt"), Error);
  fs::remove_all(dir);
}

TEST_CASE("month parsing and formatting") {
  CHECK(YearMonth::parse("2016-06")->str() == "2016-06");
  CHECK(YearMonth::parse("2016-6")->str() == "2016-06");
  CHECK(!YearMonth::parse("2016-13"));
  CHECK(!YearMonth::parse("2016-0"));
  CHECK(!YearMonth::parse("16-06"));
  CHECK(!YearMonth::parse("2016/06"));
  CHECK(YearMonth(2012, 12).next() == YearMonth(2013, 1));
  CHECK(YearMonth(2025, 1) - YearMonth(2012, 5) == 152);
}
