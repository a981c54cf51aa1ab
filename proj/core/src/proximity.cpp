#include "kcx/proximity.hpp"

#include <algorithm>

#include "kcx/complexity.hpp"
#include "kcx/csv.hpp"
#include "kcx/error.hpp"
#include "kcx/float_format.hpp"

namespace kcx {

ProximityMatrix proximity(const AdvantageMatrix& m) {
  auto [div, ub] = diversity_ubiquity(m);  // also validates pruning
  (void)div;
  std::size_t na = m.articles.size();
  if (na > 20000) throw_precondition("proximity: article index too large for dense accumulation");

  // Co-advantage counts in a dense upper triangle, built per language row.
  std::vector<std::int32_t> co(na * (na + 1) / 2, 0);
  auto tri = [na](std::size_t i, std::size_t j) {  // i <= j
    return i * na - i * (i + 1) / 2 + j;
  };
  for (std::size_t r = 0; r < m.bits.n_rows(); ++r) {
    auto row = m.bits.row(r);
    for (std::size_t x = 0; x < row.size(); ++x)
      for (std::size_t y = x + 1; y < row.size(); ++y)
        ++co[tri(static_cast<std::size_t>(row[x].col), static_cast<std::size_t>(row[y].col))];
  }

  ProximityMatrix phi;
  phi.articles = m.articles;
  phi.values = SparseRowMatrix<double>(na, na);
  for (std::size_t i = 0; i < na; ++i) {
    phi.values.add(i, i, 1.0);
    for (std::size_t j = i + 1; j < na; ++j) {
      std::int32_t c = co[tri(i, j)];
      if (c == 0) continue;
      double v = static_cast<double>(c) / static_cast<double>(std::max(ub[i], ub[j]));
      phi.values.add(i, j, v);
      phi.values.add(j, i, v);
    }
  }
  phi.values.finalize();
  return phi;
}

namespace {

double density_at(const AdvantageMatrix& m, const ProximityMatrix& phi, std::size_t li,
                  std::size_t ai) {
  double num = 0, den = 0;
  auto row = m.bits.row(li);
  for (const auto& e : phi.values.row(ai)) {
    std::size_t a2 = static_cast<std::size_t>(e.col);
    if (a2 == ai) continue;
    den += e.value;
    // Membership test against the language's sorted advantage row.
    auto it = std::lower_bound(row.begin(), row.end(), e.col,
                               [](const auto& ent, std::int32_t col) { return ent.col < col; });
    if (it != row.end() && it->col == e.col) num += e.value;
  }
  if (den == 0) return 0.0;
  return num / den;
}

}  // namespace

double relatedness_density(const AdvantageMatrix& m, const ProximityMatrix& phi,
                           const std::string& language, const std::string& article) {
  auto li = std::lower_bound(m.languages.begin(), m.languages.end(), language);
  if (li == m.languages.end() || *li != language)
    throw_lookup("relatedness_density: unknown language '" + language + "'");
  auto ai = std::lower_bound(phi.articles.begin(), phi.articles.end(), article);
  if (ai == phi.articles.end() || *ai != article)
    throw_lookup("relatedness_density: unknown article '" + article + "'");
  return density_at(m, phi, static_cast<std::size_t>(li - m.languages.begin()),
                    static_cast<std::size_t>(ai - phi.articles.begin()));
}

std::vector<double> relatedness_density_row(const AdvantageMatrix& m, const ProximityMatrix& phi,
                                            std::size_t language_index) {
  std::vector<double> out(phi.articles.size());
  for (std::size_t a = 0; a < out.size(); ++a) out[a] = density_at(m, phi, language_index, a);
  return out;
}

void write_proximity_csv(const std::filesystem::path& path, const ProximityMatrix& phi) {
  std::string out = "article_a,article_b,phi\n";
  for (std::size_t i = 0; i < phi.values.n_rows(); ++i)
    for (const auto& e : phi.values.row(i)) {
      std::size_t j = static_cast<std::size_t>(e.col);
      if (j < i) continue;  // upper triangle incl. diagonal
      out += phi.articles[i] + "," + phi.articles[j] + "," + format_double(e.value) + "\n";
    }
  write_text_file_atomic(path, out);
}

}  // namespace kcx
