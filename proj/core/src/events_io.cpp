#include "kcx/events_io.hpp"

#include <algorithm>

#include "kcx/csv.hpp"
#include "kcx/error.hpp"
#include "kcx/strings.hpp"
#include "kcx/time_util.hpp"

namespace kcx {

namespace {

const std::vector<std::string> kHeader = {"language", "article",  "editor",
                                          "timestamp", "checksum", "is_bot",
                                          "genre_tags"};

}  // namespace

ParsedEvents parse_events_tsv(const std::string& text) {
  ParsedEvents out;
  std::vector<CsvRow> rows = parse_csv(text, '\t');
  if (rows.empty()) throw_data("events TSV: empty file");
  require_header(rows.front(), kHeader, "events TSV");
  out.events.reserve(rows.size() - 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const CsvRow& row = rows[i];
    auto issue = [&](std::string msg) {
      out.issues.push_back({row.line_number, std::move(msg)});
    };
    if (row.fields.size() != kHeader.size()) {
      issue("expected 7 fields, got " + std::to_string(row.fields.size()));
      continue;
    }
    EditEvent ev;
    ev.language = row.fields[0];
    ev.article = row.fields[1];
    ev.editor = row.fields[2];
    if (ev.language.empty() || ev.article.empty()) {
      issue("language and article must be non-empty");
      continue;
    }
    try {
      ev.timestamp = parse_iso8601_utc(row.fields[3]);
    } catch (const Error& e) {
      issue(e.what());
      continue;
    }
    ev.checksum = row.fields[4];
    if (row.fields[5] == "true" || row.fields[5] == "1") {
      ev.is_bot = true;
    } else if (row.fields[5] == "false" || row.fields[5] == "0") {
      ev.is_bot = false;
    } else {
      issue("is_bot must be true/false, got '" + row.fields[5] + "'");
      continue;
    }
    if (!row.fields[6].empty()) {
      ev.genre_tags = split(row.fields[6], '|');
      std::sort(ev.genre_tags.begin(), ev.genre_tags.end());
      ev.genre_tags.erase(std::unique(ev.genre_tags.begin(), ev.genre_tags.end()),
                          ev.genre_tags.end());
    }
    out.events.push_back(std::move(ev));
  }
  return out;
}

ParsedEvents read_events_tsv(const std::filesystem::path& path) {
  return parse_events_tsv(read_text_file(path));
}

std::string events_to_tsv(std::span<const EditEvent> events) {
  std::string out = join(kHeader, "\t") + "\n";
  for (const EditEvent& ev : events) {
    out += ev.language;
    out += '\t';
    out += ev.article;
    out += '\t';
    out += ev.editor;
    out += '\t';
    out += format_iso8601_utc(ev.timestamp);
    out += '\t';
    out += ev.checksum;
    out += '\t';
    out += ev.is_bot ? "true" : "false";
    out += '\t';
    out += join(ev.genre_tags, "|");
    out += '\n';
  }
  return out;
}

void write_events_tsv(const std::filesystem::path& path, std::span<const EditEvent> events) {
  write_text_file_atomic(path, events_to_tsv(events));
}

std::vector<EditEvent> slice_by_year(std::span<const EditEvent> events, int year) {
  std::int64_t lo = year_start(year);
  std::int64_t hi = year_start(year + 1);
  std::vector<EditEvent> out;
  for (const EditEvent& ev : events)
    if (ev.timestamp >= lo && ev.timestamp < hi) out.push_back(ev);
  return out;
}

}  // namespace kcx
