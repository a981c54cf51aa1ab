#include "kcx/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "kcx/error.hpp"
#include "kcx/strings.hpp"

namespace kcx {

std::vector<CsvRow> parse_csv(std::string_view text, char sep) {
  std::vector<CsvRow> rows;
  CsvRow row;
  row.line_number = 1;
  std::string field;
  bool in_quotes = false;
  bool row_has_content = false;
  std::size_t line = 1;

  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    if (row_has_content || !row.fields.empty() || !field.empty()) {
      end_field();
      rows.push_back(std::move(row));
    }
    row = CsvRow{};
    row.line_number = line;
    row_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      in_quotes = true;
      row_has_content = true;
    } else if (c == sep) {
      end_field();
      row_has_content = true;
    } else if (c == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      ++line;
      end_row();
    } else {
      field += c;
      row_has_content = true;
    }
  }
  if (in_quotes) throw_data("unterminated quoted CSV field at line " + std::to_string(line));
  if (!field.empty() && field.back() == '\r') field.pop_back();
  end_row();
  return rows;
}

std::vector<CsvRow> read_csv_file(const std::filesystem::path& path, char sep) {
  return parse_csv(read_text_file(path), sep);
}

std::string csv_escape(std::string_view field, char sep) {
  bool needs_quotes = false;
  for (char c : field) {
    if (c == sep || c == '"' || c == '\n' || c == '\r') {
      needs_quotes = true;
      break;
    }
  }
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_line(const std::vector<std::string>& fields, char sep) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += sep;
    out += csv_escape(fields[i], sep);
  }
  out += '\n';
  return out;
}

void require_header(const CsvRow& row, const std::vector<std::string>& expected,
                    std::string_view what) {
  if (row.fields != expected)
    throw_data(std::string(what) + ": expected header '" + join(expected, ",") + "', got '" +
               join(row.fields, ",") + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_data("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path dir = path.parent_path();
  if (!dir.empty()) std::filesystem::create_directories(dir);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw_data("cannot write file: " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw_data("short write: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace kcx
