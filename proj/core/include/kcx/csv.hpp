#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace kcx {

// Minimal RFC-4180 style CSV: comma separator, double-quote escaping,
// LF or CRLF line ends. Our own artifacts never need quoting but user
// inputs (titles, indicator names) may.

struct CsvRow {
  std::size_t line_number = 0;  // 1-based, header included
  std::vector<std::string> fields;
};

// Parses the whole document. Throws Error(data) on unbalanced quotes.
std::vector<CsvRow> parse_csv(std::string_view text, char sep = ',');

std::vector<CsvRow> read_csv_file(const std::filesystem::path& path, char sep = ',');

std::string csv_escape(std::string_view field, char sep = ',');

std::string csv_line(const std::vector<std::string>& fields, char sep = ',');

// Validates a header row against the expected exact field list.
void require_header(const CsvRow& row, const std::vector<std::string>& expected,
                    std::string_view what);

std::string read_text_file(const std::filesystem::path& path);

// Atomic write: temp file in the same directory, then rename.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace kcx
