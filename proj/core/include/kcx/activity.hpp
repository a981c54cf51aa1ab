#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kcx/sparse.hpp"
#include "kcx/types.hpp"

namespace kcx {

struct PruneReport {
  std::vector<std::string> dropped_languages;
  std::vector<std::string> dropped_articles;

  bool empty() const { return dropped_languages.empty() && dropped_articles.empty(); }
  void append(const PruneReport& other);
  friend bool operator==(const PruneReport&, const PruneReport&) = default;
};

// Sparse nonnegative edit counts E_la over indexed languages × articles.
// Invariants: indices sorted lexicographically and unique; every stored
// count > 0; no all-zero row or column.
struct ActivityMatrix {
  std::vector<std::string> languages;
  std::vector<std::string> articles;
  SparseRowMatrix<std::int64_t> counts;  // rows follow `languages`
  std::optional<CorpusSlice> slice;
  PruneReport prune_report;

  std::int64_t total() const;
  std::optional<std::size_t> language_index(const std::string& code) const;
  std::optional<std::size_t> article_index(const std::string& id) const;

  friend bool operator==(const ActivityMatrix&, const ActivityMatrix&) = default;
};

// Old index -> new index, -1 for removed entries.
struct IndexMapping {
  std::vector<std::int32_t> languages;
  std::vector<std::int32_t> articles;
};

// Tallies non-excluded events inside the slice. Languages/articles that
// appear in the stream but contribute nothing end up in the prune report.
// Throws Error(data) if every event is filtered out.
ActivityMatrix build_activity_matrix(std::span<const EditEvent> events, const CorpusSlice& slice,
                                     bool exclude_bots);

bool event_in_slice(const EditEvent& ev, const CorpusSlice& slice);

// Iteratively removes rows/columns whose totals fall below the thresholds
// until a fixpoint. Thresholds must be >= 1; an empty result is an error.
ActivityMatrix prune(const ActivityMatrix& m, std::int64_t min_row_total,
                     std::int64_t min_col_total, IndexMapping* mapping = nullptr);

// Entrywise sum over the union of the indices. Associative and commutative,
// which is what permits sharded parallel construction.
ActivityMatrix merge(std::span<const ActivityMatrix> shards);

}  // namespace kcx
