// Minimal comma-separated reading helpers for the files this toolkit writes.
// Fields never contain commas or quotes, so no quoting is supported.
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace cutfit::csv {

std::vector<std::string_view> split(std::string_view line, char sep = ',');

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column position by name; throws std::runtime_error if absent.
  std::size_t column(std::string_view name) const;
};

/// Reads a header row plus data rows; blank lines are skipped and \r is stripped.
Table read_file(const std::filesystem::path& path);
Table parse(std::string_view text);

double to_double(std::string_view field);
std::uint64_t to_uint(std::string_view field);
bool to_bool(std::string_view field);

}  // namespace cutfit::csv
