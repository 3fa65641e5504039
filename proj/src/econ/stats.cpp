// SPDX-License-Identifier: Apache-2.0
#include "uix/econ/stats.hpp"

#include <algorithm>
#include <cmath>

#include "uix/errors.hpp"

namespace uix::econ {

double pearson_correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error("correlation: length mismatch");
  const std::size_t n = a.size();
  if (n < 2) throw Error("correlation: need at least 2 observations");

  auto constant = [](std::span<const double> x) {
    const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    return *lo == *hi;
  };
  if (constant(a) || constant(b)) {
    throw Error("correlation: undefined for a constant series");
  }

  double mean_a = 0.0, mean_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_a += a[i];
    mean_b += b[i];
  }
  mean_a /= static_cast<double>(n);
  mean_b /= static_cast<double>(n);

  double saa = 0.0, sbb = 0.0, sab = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    saa += da * da;
    sbb += db * db;
    sab += da * db;
  }
  return sab / (std::sqrt(saa) * std::sqrt(sbb));
}

CorrelationReport correlate_monthly(const MonthlySeries& a, const MonthlySeries& b) {
  CorrelationReport report;
  std::size_t ia = 0, ib = 0;
  while (ia < a.months.size() && ib < b.months.size()) {
    if (a.months[ia] < b.months[ib]) {
      ++ia;
    } else if (b.months[ib] < a.months[ia]) {
      ++ib;
    } else {
      report.months.push_back(a.months[ia]);
      report.a.push_back(a.values[ia]);
      report.b.push_back(b.values[ib]);
      ++ia;
      ++ib;
    }
  }
  if (report.months.empty()) {
    throw Error("correlation: series share no months");
  }
  report.n = report.months.size();
  report.overlap_start = report.months.front();
  report.overlap_end = report.months.back();
  report.r = pearson_correlation(report.a, report.b);
  return report;
}

}  // namespace uix::econ
