// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace uix {

/// Calendar year-month, the time unit of every series in the toolkit.
/// Stored as a flat month count so ranges and gaps are plain integer math.
class YearMonth {
public:
  YearMonth() = default;
  YearMonth(int year, int month) : index_(year * 12 + (month - 1)) {}

  /// Accepts "YYYY-MM" or "YYYY-M" (month 1..12, four-digit year).
  static std::optional<YearMonth> parse(std::string_view s);

  int year() const { return index_ >= 0 ? index_ / 12 : -((11 - index_) / 12); }
  int month() const { return index_ - year() * 12 + 1; }

  /// Canonical zero-padded "YYYY-MM".
  std::string str() const;

  YearMonth& operator++() { ++index_; return *this; }
  YearMonth next() const { YearMonth m(*this); ++m; return m; }

  friend int operator-(YearMonth a, YearMonth b) { return a.index_ - b.index_; }
  friend YearMonth operator+(YearMonth a, int n) { a.index_ += n; return a; }

  auto operator<=>(const YearMonth&) const = default;

private:
  int index_ = 0;  // months since year 0
};

}  // namespace uix
