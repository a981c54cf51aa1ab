#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "kcx/types.hpp"

namespace kcx {

// Edit-event interchange: UTF-8 TSV with header
//   language\tarticle\teditor\ttimestamp\tchecksum\tis_bot\tgenre_tags
// timestamp ISO-8601 Z, genre_tags '|'-separated, checksum may be empty.

struct ParsedEvents {
  std::vector<EditEvent> events;
  std::vector<ParseIssue> issues;  // malformed rows, aggregated with line numbers
};

ParsedEvents parse_events_tsv(const std::string& text);

ParsedEvents read_events_tsv(const std::filesystem::path& path);

std::string events_to_tsv(std::span<const EditEvent> events);

void write_events_tsv(const std::filesystem::path& path, std::span<const EditEvent> events);

// Events whose timestamp falls in [Jan 1 year, Jan 1 year+1) UTC.
std::vector<EditEvent> slice_by_year(std::span<const EditEvent> events, int year);

}  // namespace kcx
