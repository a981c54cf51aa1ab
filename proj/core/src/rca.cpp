#include "kcx/rca.hpp"

#include "kcx/digest.hpp"
#include "kcx/error.hpp"
#include "kcx/float_format.hpp"

namespace kcx {

RcaMatrix compute_rca(const ActivityMatrix& m) {
  std::size_t nl = m.languages.size(), na = m.articles.size();
  if (nl == 0 || na == 0) throw_precondition("compute_rca: empty matrix");

  std::vector<std::int64_t> row_tot(nl);
  for (std::size_t r = 0; r < nl; ++r) row_tot[r] = m.counts.row_total(r);
  std::vector<std::int64_t> col_tot = m.counts.col_totals();
  std::int64_t grand = 0;
  for (std::int64_t t : row_tot) grand += t;

  for (std::size_t r = 0; r < nl; ++r)
    if (row_tot[r] == 0)
      throw_precondition("compute_rca: all-zero row for language " + m.languages[r]);
  for (std::size_t c = 0; c < na; ++c)
    if (col_tot[c] == 0)
      throw_precondition("compute_rca: all-zero column for article " + m.articles[c]);

  RcaMatrix out;
  out.languages = m.languages;
  out.articles = m.articles;
  out.values = SparseRowMatrix<double>(nl, na);
  double g = static_cast<double>(grand);
  for (std::size_t r = 0; r < nl; ++r) {
    double row = static_cast<double>(row_tot[r]);
    for (const auto& e : m.counts.row(r)) {
      double col = static_cast<double>(col_tot[static_cast<std::size_t>(e.col)]);
      out.values.add(r, static_cast<std::size_t>(e.col),
                     (static_cast<double>(e.value) * g) / (row * col));
    }
  }
  out.values.finalize();
  return out;
}

AdvantageMatrix binarize(const RcaMatrix& rca, double threshold) {
  if (!(threshold > 0)) throw_precondition("binarize: threshold must be > 0");

  std::size_t nl = rca.languages.size(), na = rca.articles.size();
  SparseRowMatrix<std::uint8_t> bits(nl, na);
  for (std::size_t r = 0; r < nl; ++r)
    for (const auto& e : rca.values.row(r))
      if (e.value >= threshold) bits.add(r, static_cast<std::size_t>(e.col), 1);
  bits.finalize();
  if (bits.nnz() == 0) throw_data("binarize: no language clears the RCA threshold");

  // Drop emptied rows/columns, renumbering the survivors.
  std::vector<std::int64_t> col_nnz(na, 0);
  std::vector<std::int32_t> keep_rows, keep_cols;
  for (std::size_t r = 0; r < nl; ++r) {
    if (!bits.row(r).empty()) keep_rows.push_back(static_cast<std::int32_t>(r));
    for (const auto& e : bits.row(r)) ++col_nnz[static_cast<std::size_t>(e.col)];
  }
  for (std::size_t c = 0; c < na; ++c)
    if (col_nnz[c] > 0) keep_cols.push_back(static_cast<std::int32_t>(c));

  AdvantageMatrix out;
  out.threshold = threshold;
  for (std::int32_t r : keep_rows) out.languages.push_back(rca.languages[static_cast<std::size_t>(r)]);
  for (std::int32_t c : keep_cols) out.articles.push_back(rca.articles[static_cast<std::size_t>(c)]);
  out.bits = bits.select(keep_rows, keep_cols);
  for (std::size_t r = 0; r < nl; ++r)
    if (bits.row(r).empty()) out.prune_report.dropped_languages.push_back(rca.languages[r]);
  for (std::size_t c = 0; c < na; ++c)
    if (col_nnz[c] == 0) out.prune_report.dropped_articles.push_back(rca.articles[c]);
  return out;
}

std::string advantage_digest(const AdvantageMatrix& m) {
  std::string canon = "advantage\nthreshold=" + format_double(m.threshold) + "\n";
  for (std::size_t r = 0; r < m.bits.n_rows(); ++r)
    for (const auto& e : m.bits.row(r)) {
      canon += m.languages[r];
      canon += ',';
      canon += m.articles[static_cast<std::size_t>(e.col)];
      canon += '\n';
    }
  return sha256_hex(canon);
}

}  // namespace kcx
