// SPDX-License-Identifier: Apache-2.0
#include "uix/month.hpp"

#include <cctype>
#include <cstdio>

namespace uix {

std::optional<YearMonth> YearMonth::parse(std::string_view s) {
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (s.size() < 6 || s.size() > 7) return std::nullopt;
  for (int i = 0; i < 4; ++i)
    if (!digit(s[i])) return std::nullopt;
  if (s[4] != '-') return std::nullopt;
  int month = 0;
  for (std::size_t i = 5; i < s.size(); ++i) {
    if (!digit(s[i])) return std::nullopt;
    month = month * 10 + (s[i] - '0');
  }
  if (month < 1 || month > 12) return std::nullopt;
  const int year = (s[0] - '0') * 1000 + (s[1] - '0') * 100 + (s[2] - '0') * 10 + (s[3] - '0');
  return YearMonth(year, month);
}

std::string YearMonth::str() const {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02d", year(), month());
  return buf;
}

}  // namespace uix
