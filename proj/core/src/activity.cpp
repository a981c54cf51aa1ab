#include "kcx/activity.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kcx/error.hpp"
#include "kcx/time_util.hpp"

namespace kcx {

void PruneReport::append(const PruneReport& other) {
  auto merge_sorted = [](std::vector<std::string>& into, const std::vector<std::string>& from) {
    into.insert(into.end(), from.begin(), from.end());
    std::sort(into.begin(), into.end());
    into.erase(std::unique(into.begin(), into.end()), into.end());
  };
  merge_sorted(dropped_languages, other.dropped_languages);
  merge_sorted(dropped_articles, other.dropped_articles);
}

std::int64_t ActivityMatrix::total() const {
  std::int64_t s = 0;
  for (std::size_t r = 0; r < counts.n_rows(); ++r) s += counts.row_total(r);
  return s;
}

namespace {

std::optional<std::size_t> find_sorted(const std::vector<std::string>& index,
                                       const std::string& key) {
  auto it = std::lower_bound(index.begin(), index.end(), key);
  if (it != index.end() && *it == key)
    return static_cast<std::size_t>(it - index.begin());
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> ActivityMatrix::language_index(const std::string& code) const {
  return find_sorted(languages, code);
}

std::optional<std::size_t> ActivityMatrix::article_index(const std::string& id) const {
  return find_sorted(articles, id);
}

bool event_in_slice(const EditEvent& ev, const CorpusSlice& slice) {
  if (!slice.genre_or_topic.empty() &&
      !std::binary_search(ev.genre_tags.begin(), ev.genre_tags.end(), slice.genre_or_topic))
    return false;
  if (slice.year_range) {
    int y = year_of(ev.timestamp);
    if (y < slice.year_range->first || y > slice.year_range->second) return false;
  }
  return true;
}

ActivityMatrix build_activity_matrix(std::span<const EditEvent> events, const CorpusSlice& slice,
                                     bool exclude_bots) {
  if (!slice.valid()) throw_precondition("corpus slice: year_from > year_to");

  std::set<std::string> seen_languages, seen_articles;
  std::map<std::pair<std::string, std::string>, std::int64_t> tally;
  for (const EditEvent& ev : events) {
    seen_languages.insert(ev.language);
    seen_articles.insert(ev.article);
    if (ev.is_bot && exclude_bots) continue;
    if (!event_in_slice(ev, slice)) continue;
    ++tally[{ev.language, ev.article}];
  }
  if (tally.empty())
    throw_data("activity matrix is empty: all " + std::to_string(events.size()) +
               " events were filtered out");

  ActivityMatrix m;
  m.slice = slice;
  std::set<std::string> langs, arts;
  for (const auto& [key, count] : tally) {
    langs.insert(key.first);
    arts.insert(key.second);
  }
  m.languages.assign(langs.begin(), langs.end());
  m.articles.assign(arts.begin(), arts.end());
  m.counts = SparseRowMatrix<std::int64_t>(m.languages.size(), m.articles.size());
  for (const auto& [key, count] : tally)
    m.counts.add(*m.language_index(key.first), *m.article_index(key.second), count);
  m.counts.finalize();

  for (const std::string& l : seen_languages)
    if (!langs.count(l)) m.prune_report.dropped_languages.push_back(l);
  for (const std::string& a : seen_articles)
    if (!arts.count(a)) m.prune_report.dropped_articles.push_back(a);
  return m;
}

ActivityMatrix prune(const ActivityMatrix& m, std::int64_t min_row_total,
                     std::int64_t min_col_total, IndexMapping* mapping) {
  if (min_row_total < 1 || min_col_total < 1) throw_precondition("prune: thresholds must be >= 1");

  std::size_t nl = m.languages.size(), na = m.articles.size();
  std::vector<bool> keep_row(nl, true), keep_col(na, true);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::int64_t> row_tot(nl, 0), col_tot(na, 0);
    for (std::size_t r = 0; r < nl; ++r) {
      if (!keep_row[r]) continue;
      for (const auto& e : m.counts.row(r)) {
        if (!keep_col[static_cast<std::size_t>(e.col)]) continue;
        row_tot[r] += e.value;
        col_tot[static_cast<std::size_t>(e.col)] += e.value;
      }
    }
    for (std::size_t r = 0; r < nl; ++r)
      if (keep_row[r] && row_tot[r] < min_row_total) keep_row[r] = false, changed = true;
    for (std::size_t c = 0; c < na; ++c)
      if (keep_col[c] && col_tot[c] < min_col_total) keep_col[c] = false, changed = true;
  }

  std::vector<std::int32_t> rows, cols;
  for (std::size_t r = 0; r < nl; ++r)
    if (keep_row[r]) rows.push_back(static_cast<std::int32_t>(r));
  for (std::size_t c = 0; c < na; ++c)
    if (keep_col[c]) cols.push_back(static_cast<std::int32_t>(c));
  if (rows.empty() || cols.empty()) throw_data("prune: matrix is empty after pruning");

  ActivityMatrix out;
  out.slice = m.slice;
  out.prune_report = m.prune_report;
  PruneReport step;
  for (std::size_t r = 0; r < nl; ++r)
    if (!keep_row[r]) step.dropped_languages.push_back(m.languages[r]);
  for (std::size_t c = 0; c < na; ++c)
    if (!keep_col[c]) step.dropped_articles.push_back(m.articles[c]);
  out.prune_report.append(step);

  for (std::int32_t r : rows) out.languages.push_back(m.languages[static_cast<std::size_t>(r)]);
  for (std::int32_t c : cols) out.articles.push_back(m.articles[static_cast<std::size_t>(c)]);
  out.counts = m.counts.select(rows, cols);

  if (mapping) {
    mapping->languages.assign(nl, -1);
    mapping->articles.assign(na, -1);
    for (std::size_t i = 0; i < rows.size(); ++i)
      mapping->languages[static_cast<std::size_t>(rows[i])] = static_cast<std::int32_t>(i);
    for (std::size_t i = 0; i < cols.size(); ++i)
      mapping->articles[static_cast<std::size_t>(cols[i])] = static_cast<std::int32_t>(i);
  }
  return out;
}

ActivityMatrix merge(std::span<const ActivityMatrix> shards) {
  if (shards.empty()) throw_precondition("merge: no shards");

  std::set<std::string> langs, arts;
  for (const ActivityMatrix& s : shards) {
    langs.insert(s.languages.begin(), s.languages.end());
    arts.insert(s.articles.begin(), s.articles.end());
  }
  ActivityMatrix out;
  out.languages.assign(langs.begin(), langs.end());
  out.articles.assign(arts.begin(), arts.end());
  out.counts = SparseRowMatrix<std::int64_t>(out.languages.size(), out.articles.size());
  for (const ActivityMatrix& s : shards) {
    for (std::size_t r = 0; r < s.counts.n_rows(); ++r) {
      std::size_t nr = *out.language_index(s.languages[r]);
      for (const auto& e : s.counts.row(r))
        out.counts.add(nr, *out.article_index(s.articles[static_cast<std::size_t>(e.col)]),
                       e.value);
    }
  }
  out.counts.finalize();

  bool same_slice = true;
  for (const ActivityMatrix& s : shards)
    if (s.slice != shards.front().slice) same_slice = false;
  if (same_slice) out.slice = shards.front().slice;
  for (const ActivityMatrix& s : shards) out.prune_report.append(s.prune_report);
  return out;
}

}  // namespace kcx
