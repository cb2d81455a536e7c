#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace mgsize {

// Shortest-ish stable rendering used by every CSV writer: 10 significant
// digits, so repeated runs produce byte-identical files.
std::string csv_number(double v);

// Minimal CSV: comma separated, no quoting (none of our fields need it).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Column index by name; throws ParseError when absent.
  std::size_t column(std::string_view name) const;
  double number(std::size_t row, std::string_view name) const;
};

std::vector<std::string> split_csv_line(std::string_view line);
CsvTable read_csv(const std::filesystem::path& path);
CsvTable parse_csv(std::string_view text, std::string_view source = "<memory>");

}  // namespace mgsize
