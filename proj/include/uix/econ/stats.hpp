// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "uix/month.hpp"

namespace uix::econ {

/// A month-keyed series, sorted by month with unique months.
struct MonthlySeries {
  std::string name;
  std::vector<YearMonth> months;
  std::vector<double> values;
};

/// Product-moment correlation of two equal-length samples. Rejects
/// constant input and samples shorter than 2.
double pearson_correlation(std::span<const double> a, std::span<const double> b);

struct CorrelationReport {
  double r = 0.0;
  std::size_t n = 0;
  YearMonth overlap_start;
  YearMonth overlap_end;
  std::vector<YearMonth> months;  // the intersection, sorted
  std::vector<double> a;          // aligned values
  std::vector<double> b;
};

/// Intersects the two series' months, then correlates the aligned values.
/// Rejects empty overlaps.
CorrelationReport correlate_monthly(const MonthlySeries& a, const MonthlySeries& b);

}  // namespace uix::econ
