#include "kcx/matrix_io.hpp"

#include <nlohmann/json.hpp>

#include "kcx/csv.hpp"
#include "kcx/error.hpp"
#include "kcx/float_format.hpp"
#include "kcx/version.hpp"

namespace kcx {

using nlohmann::json;

namespace {

json slice_to_json(const std::optional<CorpusSlice>& slice) {
  if (!slice) return nullptr;
  json j;
  j["genre_or_topic"] = slice->genre_or_topic;
  if (slice->year_range)
    j["year_range"] = {slice->year_range->first, slice->year_range->second};
  else
    j["year_range"] = nullptr;
  if (slice->parent_topic)
    j["parent_topic"] = *slice->parent_topic;
  else
    j["parent_topic"] = nullptr;
  return j;
}

std::optional<CorpusSlice> slice_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  CorpusSlice s;
  s.genre_or_topic = j.at("genre_or_topic").get<std::string>();
  if (!j.at("year_range").is_null())
    s.year_range = {j["year_range"][0].get<int>(), j["year_range"][1].get<int>()};
  if (!j.at("parent_topic").is_null()) s.parent_topic = j["parent_topic"].get<std::string>();
  return s;
}

json report_to_json(const PruneReport& r) {
  return {{"dropped_languages", r.dropped_languages}, {"dropped_articles", r.dropped_articles}};
}

PruneReport report_from_json(const json& j) {
  PruneReport r;
  r.dropped_languages = j.at("dropped_languages").get<std::vector<std::string>>();
  r.dropped_articles = j.at("dropped_articles").get<std::vector<std::string>>();
  return r;
}

struct ManifestData {
  std::string kind;
  std::vector<std::string> languages;
  std::vector<std::string> articles;
  std::optional<CorpusSlice> slice;
  PruneReport report;
  double threshold = 0;
};

void write_manifest(const std::filesystem::path& csv_path, const ManifestData& m,
                    std::size_t nnz, std::int64_t total) {
  json j;
  j["format"] = "kcx-matrix";
  j["format_version"] = kFormatVersion;
  j["kind"] = m.kind;
  j["languages"] = m.languages;
  j["articles"] = m.articles;
  j["slice"] = slice_to_json(m.slice);
  j["prune_report"] = report_to_json(m.report);
  j["nnz"] = nnz;
  if (m.kind == "activity") j["total"] = total;
  if (m.kind == "advantage") j["threshold"] = m.threshold;
  write_text_file_atomic(manifest_path_for(csv_path), j.dump(2) + "\n");
}

ManifestData read_manifest(const std::filesystem::path& csv_path, const std::string& want_kind) {
  std::filesystem::path mp = manifest_path_for(csv_path);
  json j;
  try {
    j = json::parse(read_text_file(mp));
  } catch (const json::exception& e) {
    throw_data("matrix manifest " + mp.string() + ": " + e.what());
  }
  if (j.value("format", "") != "kcx-matrix")
    throw_data("matrix manifest " + mp.string() + ": not a kcx-matrix manifest");
  ManifestData m;
  m.kind = j.at("kind").get<std::string>();
  if (m.kind != want_kind)
    throw_data("matrix manifest " + mp.string() + ": kind is '" + m.kind + "', expected '" +
               want_kind + "'");
  m.languages = j.at("languages").get<std::vector<std::string>>();
  m.articles = j.at("articles").get<std::vector<std::string>>();
  m.slice = slice_from_json(j.at("slice"));
  m.report = report_from_json(j.at("prune_report"));
  m.threshold = j.value("threshold", 1.0);
  return m;
}

// Shared triplet reader: returns (row, col, raw value string) resolved
// against the manifest indices.
template <typename Sink>
void read_triplets(const std::filesystem::path& csv_path, const std::string& value_header,
                   const std::vector<std::string>& languages,
                   const std::vector<std::string>& articles, Sink&& sink) {
  std::vector<CsvRow> rows = read_csv_file(csv_path);
  if (rows.empty()) throw_data("matrix CSV " + csv_path.string() + ": empty file");
  require_header(rows.front(), {"language", "article", value_header}, csv_path.string());

  auto index_of = [&](const std::vector<std::string>& idx, const std::string& key,
                      std::size_t line, const char* what) {
    auto it = std::lower_bound(idx.begin(), idx.end(), key);
    if (it == idx.end() || *it != key)
      throw_data(csv_path.string() + " line " + std::to_string(line) + ": " + what + " '" + key +
                 "' not in manifest index");
    return static_cast<std::size_t>(it - idx.begin());
  };

  for (std::size_t i = 1; i < rows.size(); ++i) {
    const CsvRow& row = rows[i];
    if (row.fields.size() != 3)
      throw_data(csv_path.string() + " line " + std::to_string(row.line_number) +
                 ": expected 3 fields");
    std::size_t r = index_of(languages, row.fields[0], row.line_number, "language");
    std::size_t c = index_of(articles, row.fields[1], row.line_number, "article");
    sink(r, c, row.fields[2], row.line_number);
  }
}

template <typename T>
void check_invariants(const std::filesystem::path& p, const std::vector<std::string>& languages,
                      const std::vector<std::string>& articles, const SparseRowMatrix<T>& m) {
  std::vector<std::int64_t> col_nnz(articles.size(), 0);
  for (std::size_t r = 0; r < m.n_rows(); ++r) {
    if (m.row(r).empty())
      throw_data(p.string() + ": language '" + languages[r] + "' has no entries");
    for (const auto& e : m.row(r)) ++col_nnz[static_cast<std::size_t>(e.col)];
  }
  for (std::size_t c = 0; c < articles.size(); ++c)
    if (col_nnz[c] == 0)
      throw_data(p.string() + ": article '" + articles[c] + "' has no entries");
}

}  // namespace

std::filesystem::path manifest_path_for(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  if (p.extension() == ".csv") p.replace_extension();
  p += ".manifest.json";
  return p;
}

void write_activity_matrix(const std::filesystem::path& csv_path, const ActivityMatrix& m) {
  std::string out = "language,article,count\n";
  for (std::size_t r = 0; r < m.counts.n_rows(); ++r)
    for (const auto& e : m.counts.row(r))
      out += m.languages[r] + "," + m.articles[static_cast<std::size_t>(e.col)] + "," +
             std::to_string(e.value) + "\n";
  write_text_file_atomic(csv_path, out);
  write_manifest(csv_path, {"activity", m.languages, m.articles, m.slice, m.prune_report, 0},
                 m.counts.nnz(), m.total());
}

ActivityMatrix read_activity_matrix(const std::filesystem::path& csv_path) {
  ManifestData man = read_manifest(csv_path, "activity");
  ActivityMatrix m;
  m.languages = man.languages;
  m.articles = man.articles;
  m.slice = man.slice;
  m.prune_report = man.report;
  m.counts = SparseRowMatrix<std::int64_t>(m.languages.size(), m.articles.size());
  read_triplets(csv_path, "count", m.languages, m.articles,
                [&](std::size_t r, std::size_t c, const std::string& v, std::size_t line) {
                  std::int64_t n = parse_int64(v, "count");
                  if (n <= 0)
                    throw_data(csv_path.string() + " line " + std::to_string(line) +
                               ": counts must be positive");
                  m.counts.add(r, c, n);
                });
  m.counts.finalize();
  check_invariants(csv_path, m.languages, m.articles, m.counts);
  return m;
}

void write_rca_matrix(const std::filesystem::path& csv_path, const RcaMatrix& m) {
  std::string out = "language,article,value\n";
  for (std::size_t r = 0; r < m.values.n_rows(); ++r)
    for (const auto& e : m.values.row(r))
      out += m.languages[r] + "," + m.articles[static_cast<std::size_t>(e.col)] + "," +
             format_double(e.value) + "\n";
  write_text_file_atomic(csv_path, out);
  write_manifest(csv_path, {"rca", m.languages, m.articles, std::nullopt, PruneReport{}, 0},
                 m.values.nnz(), 0);
}

RcaMatrix read_rca_matrix(const std::filesystem::path& csv_path) {
  ManifestData man = read_manifest(csv_path, "rca");
  RcaMatrix m;
  m.languages = man.languages;
  m.articles = man.articles;
  m.values = SparseRowMatrix<double>(m.languages.size(), m.articles.size());
  read_triplets(csv_path, "value", m.languages, m.articles,
                [&](std::size_t r, std::size_t c, const std::string& v, std::size_t line) {
                  double x = parse_double(v, "value");
                  if (!(x > 0))
                    throw_data(csv_path.string() + " line " + std::to_string(line) +
                               ": RCA values must be positive");
                  m.values.add(r, c, x);
                });
  m.values.finalize();
  check_invariants(csv_path, m.languages, m.articles, m.values);
  return m;
}

void write_advantage_matrix(const std::filesystem::path& csv_path, const AdvantageMatrix& m) {
  std::string out = "language,article,value\n";
  for (std::size_t r = 0; r < m.bits.n_rows(); ++r)
    for (const auto& e : m.bits.row(r))
      out += m.languages[r] + "," + m.articles[static_cast<std::size_t>(e.col)] + ",1\n";
  write_text_file_atomic(csv_path, out);
  write_manifest(csv_path,
                 {"advantage", m.languages, m.articles, std::nullopt, m.prune_report, m.threshold},
                 m.bits.nnz(), 0);
}

AdvantageMatrix read_advantage_matrix(const std::filesystem::path& csv_path) {
  ManifestData man = read_manifest(csv_path, "advantage");
  AdvantageMatrix m;
  m.languages = man.languages;
  m.articles = man.articles;
  m.threshold = man.threshold;
  m.prune_report = man.report;
  m.bits = SparseRowMatrix<std::uint8_t>(m.languages.size(), m.articles.size());
  read_triplets(csv_path, "value", m.languages, m.articles,
                [&](std::size_t r, std::size_t c, const std::string& v, std::size_t line) {
                  if (v != "1")
                    throw_data(csv_path.string() + " line " + std::to_string(line) +
                               ": advantage entries must be 1");
                  m.bits.add(r, c, 1);
                });
  m.bits.finalize();
  check_invariants(csv_path, m.languages, m.articles, m.bits);
  return m;
}

}  // namespace kcx
