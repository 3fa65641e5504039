// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "uix/econ/panel.hpp"
#include "uix/errors.hpp"

using namespace uix;
using namespace uix::econ;
namespace fs = std::filesystem;

namespace {

fs::path write_temp_csv(const std::string& tag, const std::string& content) {
  const auto path = fs::temp_directory_path() /
                    ("uix_panel_" + tag + "_" + std::to_string(std::random_device{}()) + ".csv");
  std::ofstream out(path);
  out << content;
  return path;
}

MacroPanel two_series_panel(std::vector<double> a, std::vector<double> b,
                            Transform ta, Transform tb) {
  MacroPanel p;
  p.names = {"A", "B"};
  p.transforms = {ta, tb};
  p.values.resize(static_cast<Eigen::Index>(a.size()), 2);
  YearMonth m(2020, 1);
  for (std::size_t i = 0; i < a.size(); ++i, ++m) {
    p.months.push_back(m);
    p.values(static_cast<Eigen::Index>(i), 0) = a[i];
    p.values(static_cast<Eigen::Index>(i), 1) = b[i];
  }
  return p;
}

}  // namespace

TEST_CASE("read_panel_csv parses and sorts") {
  const auto path = write_temp_csv("ok",
                                   "month,GDP,CPI\n"
                                   "2020-02,101.0,100.5\n"
                                   "2020-01,100.0,100.0\n"
                                   "2020-03,102.5,100.7\n");
  const auto panel = read_panel_csv(path);
  CHECK(panel.names == std::vector<std::string>{"GDP", "CPI"});
  REQUIRE(panel.rows() == 3);
  CHECK(panel.months.front() == YearMonth(2020, 1));
  CHECK(panel.values(0, 0) == 100.0);
  CHECK(panel.values(2, 1) == doctest::Approx(100.7));
  fs::remove(path);
}

TEST_CASE("read_panel_csv rejects gaps, duplicates, bad cells") {
  const auto gap = write_temp_csv("gap", "month,X\n2020-01,1\n2020-03,2\n");
  CHECK_THROWS_WITH_AS(read_panel_csv(gap), doctest::Contains("gap"), Error);
  fs::remove(gap);

  const auto dup = write_temp_csv("dup", "month,X\n2020-01,1\n2020-1,2\n");
  CHECK_THROWS_WITH_AS(read_panel_csv(dup), doctest::Contains("duplicate"), Error);
  fs::remove(dup);

  const auto bad = write_temp_csv("bad", "month,X\n2020-01,oops\n");
  CHECK_THROWS_WITH_AS(read_panel_csv(bad), doctest::Contains("oops"), Error);
  fs::remove(bad);

  const auto head = write_temp_csv("head", "date,X\n2020-01,1\n");
  CHECK_THROWS_AS(read_panel_csv(head), Error);
  fs::remove(head);
}

TEST_CASE("log+diff transform matches hand arithmetic") {
  auto panel = two_series_panel({100.0, 110.0}, {5.0, 5.5},
                                {.log = true, .diff = 1}, {.log = false, .diff = 1});
  const auto out = transform_series(panel);
  REQUIRE(out.rows() == 1);
  CHECK(out.months[0] == YearMonth(2020, 2));
  CHECK(out.values(0, 0) == doctest::Approx(std::log(110.0) - std::log(100.0)).epsilon(1e-14));
  CHECK(out.values(0, 0) == doctest::Approx(0.0953102).epsilon(1e-5));
  CHECK(out.values(0, 1) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("log transform rejects non-positive values, naming series and month") {
  auto panel = two_series_panel({100.0, 0.0}, {1.0, 2.0},
                                {.log = true, .diff = 1}, {.log = false, .diff = 1});
  CHECK_THROWS_WITH_AS(transform_series(panel), doctest::Contains("A"), Error);
  try {
    transform_series(panel);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("2020-02") != std::string::npos);
  }
}

TEST_CASE("mixed difference orders share the shortened month axis") {
  auto panel = two_series_panel({1.0, 3.0, 6.0, 10.0}, {2.0, 4.0, 8.0, 16.0},
                                {.log = false, .diff = 2}, {.log = false, .diff = 0});
  const auto out = transform_series(panel);
  REQUIRE(out.rows() == 2);
  CHECK(out.months.front() == YearMonth(2020, 3));
  // second difference of 1,3,6,10 -> 1,1
  CHECK(out.values(0, 0) == doctest::Approx(1.0));
  CHECK(out.values(1, 0) == doctest::Approx(1.0));
  // undifferenced column keeps its tail values
  CHECK(out.values(0, 1) == doctest::Approx(8.0));
  CHECK(out.values(1, 1) == doctest::Approx(16.0));
}

TEST_CASE("transform rejects overly short samples") {
  auto panel = two_series_panel({1.0}, {2.0}, {.log = false, .diff = 1}, {.log = false, .diff = 1});
  CHECK_THROWS_AS(transform_series(panel), Error);
}

TEST_CASE("filter_months keeps the inclusive range") {
  auto panel = two_series_panel({1, 2, 3, 4, 5}, {5, 4, 3, 2, 1},
                                {.log = false, .diff = 0}, {.log = false, .diff = 0});
  const auto sub = filter_months(panel, YearMonth(2020, 2), YearMonth(2020, 4));
  REQUIRE(sub.rows() == 3);
  CHECK(sub.months.front() == YearMonth(2020, 2));
  CHECK(sub.months.back() == YearMonth(2020, 4));
  CHECK(sub.values(0, 0) == 2.0);

  const auto none = filter_months(panel, YearMonth(2030, 1), YearMonth(2030, 12));
  CHECK(none.rows() == 0);
}
