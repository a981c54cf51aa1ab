#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kcx {

// One revision record. `article` is the stable cross-lingual identifier
// (conventionally a Wikidata-style QID); the per-language title is carried
// only as metadata by the ingest layer and is not part of the interchange.
struct EditEvent {
  std::string language;
  std::string article;
  std::string editor;
  std::int64_t timestamp = 0;  // UTC seconds since epoch
  std::string checksum;        // content digest of the resulting revision; may be empty
  bool is_bot = false;
  std::vector<std::string> genre_tags;

  friend bool operator==(const EditEvent&, const EditEvent&) = default;
};

// Restriction of a corpus to a genre/topic label and/or an inclusive year
// range. An empty label means "no genre restriction".
struct CorpusSlice {
  std::string genre_or_topic;
  std::optional<std::pair<int, int>> year_range;  // [year_from, year_to], inclusive
  std::optional<std::string> parent_topic;        // topic lineage, informational

  bool valid() const {
    return !year_range || year_range->first <= year_range->second;
  }
  friend bool operator==(const CorpusSlice&, const CorpusSlice&) = default;
};

struct ParseIssue {
  std::size_t line_number;
  std::string message;
};

}  // namespace kcx
