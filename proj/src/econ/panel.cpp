// SPDX-License-Identifier: Apache-2.0
#include "uix/econ/panel.hpp"

#include <algorithm>
#include <cmath>

#include "uix/csv.hpp"
#include "uix/errors.hpp"

namespace uix::econ {

MacroPanel read_panel_csv(const std::filesystem::path& path) {
  const CsvTable table = read_csv(path);
  if (table.header.size() < 2 || table.header[0] != "month") {
    throw Error("panel: " + path.string() + ": header must be month,<series>,...");
  }

  MacroPanel panel;
  panel.names.assign(table.header.begin() + 1, table.header.end());

  struct Row {
    YearMonth month;
    std::vector<double> values;
  };
  std::vector<Row> rows;
  for (const auto& cells : table.rows) {
    Row row;
    const auto month = YearMonth::parse(cells[0]);
    if (!month) throw Error("panel: " + path.string() + ": bad month '" + cells[0] + "'");
    row.month = *month;
    for (std::size_t i = 1; i < cells.size(); ++i) {
      if (cells[i].empty()) {
        throw Error("panel: " + path.string() + ": missing value for " + panel.names[i - 1] +
                    " at " + row.month.str());
      }
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cells[i], &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cells[i].size()) {
        throw Error("panel: " + path.string() + ": bad number '" + cells[i] + "' at " +
                    row.month.str());
      }
      row.values.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error("panel: " + path.string() + " has no data rows");

  std::sort(rows.begin(), rows.end(),
            [](const Row& a, const Row& b) { return a.month < b.month; });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].month == rows[i - 1].month) {
      throw Error("panel: duplicate month " + rows[i].month.str());
    }
    if (rows[i].month - rows[i - 1].month != 1) {
      throw Error("panel: month gap between " + rows[i - 1].month.str() + " and " +
                  rows[i].month.str());
    }
  }

  panel.months.reserve(rows.size());
  panel.values.resize(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(panel.names.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    panel.months.push_back(rows[r].month);
    for (std::size_t c = 0; c < panel.names.size(); ++c) {
      panel.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rows[r].values[c];
    }
  }
  panel.transforms.assign(panel.names.size(), Transform{});
  return panel;
}

MacroPanel transform_series(const MacroPanel& panel) {
  const auto T = static_cast<std::size_t>(panel.values.rows());
  const std::size_t k = panel.names.size();
  if (panel.transforms.size() != k) {
    throw Error("panel: transform spec does not cover every variable");
  }

  int max_diff = 0;
  for (const auto& t : panel.transforms) {
    if (t.diff < 0) throw Error("panel: negative difference order");
    max_diff = std::max(max_diff, t.diff);
  }
  if (T <= static_cast<std::size_t>(max_diff)) {
    throw Error("panel: too few rows to difference " + std::to_string(max_diff) + " time(s)");
  }

  const std::size_t out_rows = T - static_cast<std::size_t>(max_diff);
  MacroPanel out;
  out.names = panel.names;
  out.transforms.assign(k, Transform{.log = false, .diff = 0});
  out.months.assign(panel.months.end() - static_cast<std::ptrdiff_t>(out_rows),
                    panel.months.end());
  out.values.resize(static_cast<Eigen::Index>(out_rows), static_cast<Eigen::Index>(k));

  for (std::size_t c = 0; c < k; ++c) {
    const auto& spec = panel.transforms[c];
    std::vector<double> series(T);
    for (std::size_t r = 0; r < T; ++r) {
      double v = panel.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      if (spec.log) {
        if (!(v > 0.0)) {
          throw Error("panel: non-positive value in log-flagged series " + panel.names[c] +
                      " at " + panel.months[r].str());
        }
        v = std::log(v);
      }
      series[r] = v;
    }
    for (int d = 0; d < spec.diff; ++d) {
      for (std::size_t r = series.size() - 1; r >= 1; --r) series[r] -= series[r - 1];
      series.erase(series.begin());
    }
    // keep the common tail so all columns share the month axis
    const std::size_t skip = series.size() - out_rows;
    for (std::size_t r = 0; r < out_rows; ++r) {
      out.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = series[skip + r];
    }
  }
  return out;
}

MacroPanel filter_months(const MacroPanel& panel, YearMonth lo, YearMonth hi) {
  MacroPanel out;
  out.names = panel.names;
  out.transforms = panel.transforms;
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < panel.months.size(); ++r) {
    if (panel.months[r] >= lo && panel.months[r] <= hi) keep.push_back(r);
  }
  out.months.reserve(keep.size());
  out.values.resize(static_cast<Eigen::Index>(keep.size()), panel.values.cols());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.months.push_back(panel.months[keep[i]]);
    out.values.row(static_cast<Eigen::Index>(i)) =
        panel.values.row(static_cast<Eigen::Index>(keep[i]));
  }
  return out;
}

}  // namespace uix::econ
