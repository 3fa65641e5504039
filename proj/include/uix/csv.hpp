// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace uix {

/// A fully parsed CSV: header row plus data rows, all cells as text.
/// Parsing is plain comma splitting with whitespace-trimmed cells; quoted
/// fields are not supported (none of the toolkit's formats need them).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::filesystem::path& path);

std::vector<std::string> split_csv_line(const std::string& line);

/// Formats a double with 10 significant digits (the toolkit's CSV real
/// format).
std::string format_real(double v);

}  // namespace uix
