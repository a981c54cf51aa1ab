#include "kcx/similarity.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <limits>

#include "kcx/csv.hpp"
#include "kcx/error.hpp"
#include "kcx/float_format.hpp"
#include "kcx/version.hpp"

namespace kcx {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <typename T>
SimilarityMatrix cosine_impl(const std::vector<std::string>& labels,
                             const SparseRowMatrix<T>& rows, SimilarityKind kind) {
  std::size_t n = labels.size();
  SimilarityMatrix sim;
  sim.kind = kind;
  sim.labels = labels;
  sim.values.assign(n * n, 0.0);
  sim.support.assign(n * n, 0);

  std::vector<double> norm(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0;
    for (const auto& e : rows.row(i)) s += static_cast<double>(e.value) * static_cast<double>(e.value);
    if (s <= 0) throw_precondition("portfolio_cosine: zero-norm row for language " + labels[i]);
    norm[i] = std::sqrt(s);
  }

  for (std::size_t i = 0; i < n; ++i) {
    sim.values[i * n + i] = 1.0;
    sim.support[i * n + i] = static_cast<std::int64_t>(rows.row(i).size());
    for (std::size_t j = i + 1; j < n; ++j) {
      auto a = rows.row(i), b = rows.row(j);
      double dot = 0;
      std::int64_t common = 0;
      std::size_t x = 0, y = 0;
      while (x < a.size() && y < b.size()) {
        if (a[x].col < b[y].col) {
          ++x;
        } else if (a[x].col > b[y].col) {
          ++y;
        } else {
          dot += static_cast<double>(a[x].value) * static_cast<double>(b[y].value);
          ++common;
          ++x;
          ++y;
        }
      }
      double v = dot / (norm[i] * norm[j]);
      sim.values[i * n + j] = sim.values[j * n + i] = v;
      sim.support[i * n + j] = sim.support[j * n + i] = common;
    }
  }
  return sim;
}

double pearson_or_nan(const std::vector<double>& x, const std::vector<double>& y) {
  std::size_t n = x.size();
  double mx = 0, my = 0;
  for (std::size_t k = 0; k < n; ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t k = 0; k < n; ++k) {
    double dx = x[k] - mx, dy = y[k] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0 || syy == 0) return kNaN;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace

const char* to_string(SimilarityKind k) {
  return k == SimilarityKind::portfolio_cosine ? "portfolio_cosine" : "log_rca_pearson";
}

const char* to_string(HeatmapOrdering o) { return o == HeatmapOrdering::input ? "input" : "seriation"; }

SimilarityMatrix portfolio_cosine(const ActivityMatrix& m) {
  return cosine_impl(m.languages, m.counts, SimilarityKind::portfolio_cosine);
}

SimilarityMatrix portfolio_cosine_rca(const RcaMatrix& m) {
  return cosine_impl(m.languages, m.values, SimilarityKind::portfolio_cosine);
}

SimilarityMatrix log_rca_pearson(const RcaMatrix& rca, double epsilon) {
  if (epsilon < 0) throw_precondition("log_rca_pearson: epsilon must be >= 0");
  std::size_t n = rca.languages.size();
  SimilarityMatrix sim;
  sim.kind = SimilarityKind::log_rca_pearson;
  sim.labels = rca.languages;
  sim.values.assign(n * n, kNaN);
  sim.support.assign(n * n, 0);

  double log_eps = epsilon > 0 ? std::log(epsilon) : 0.0;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      auto a = rca.values.row(i), b = rca.values.row(j);
      std::vector<double> xi, xj;
      std::size_t x = 0, y = 0;
      if (epsilon > 0) {
        // Union support: absent entries count as epsilon.
        while (x < a.size() || y < b.size()) {
          if (y >= b.size() || (x < a.size() && a[x].col < b[y].col)) {
            xi.push_back(std::log(a[x].value));
            xj.push_back(log_eps);
            ++x;
          } else if (x >= a.size() || a[x].col > b[y].col) {
            xi.push_back(log_eps);
            xj.push_back(std::log(b[y].value));
            ++y;
          } else {
            xi.push_back(std::log(a[x].value));
            xj.push_back(std::log(b[y].value));
            ++x;
            ++y;
          }
        }
      } else {
        // Intersection of positive support; no padding.
        while (x < a.size() && y < b.size()) {
          if (a[x].col < b[y].col) {
            ++x;
          } else if (a[x].col > b[y].col) {
            ++y;
          } else {
            xi.push_back(std::log(a[x].value));
            xj.push_back(std::log(b[y].value));
            ++x;
            ++y;
          }
        }
      }
      auto count = static_cast<std::int64_t>(xi.size());
      sim.support[i * n + j] = sim.support[j * n + i] = count;
      if (count < 3) continue;
      double v = pearson_or_nan(xi, xj);
      if (i == j && !std::isnan(v)) v = 1.0;
      sim.values[i * n + j] = sim.values[j * n + i] = v;
    }
  }
  return sim;
}

std::vector<std::size_t> seriation_order(const SimilarityMatrix& sim) {
  std::size_t n = sim.size();
  if (n == 0) return {};

  struct Cluster {
    std::vector<std::size_t> leaves;  // in output order
    bool alive = true;
  };
  std::vector<Cluster> clusters(n);
  for (std::size_t i = 0; i < n; ++i) clusters[i].leaves = {i};

  // Average-linkage distance between live clusters, Lance-Williams update.
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double s = sim.at(i, j);
      dist[i][j] = std::isnan(s) ? 1.0 : 1.0 - s;
    }

  auto leading_label = [&](std::size_t c) { return sim.labels[clusters[c].leaves.front()]; };

  std::size_t alive = n;
  while (alive > 1) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      if (!clusters[i].alive) continue;
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        if (!clusters[j].alive) continue;
        double d = dist[i][j];
        // Lexicographic tie-break on the clusters' leading labels.
        std::size_t a = i, b = j;
        if (leading_label(b) < leading_label(a)) std::swap(a, b);
        bool better = d < best;
        if (d == best) {
          std::size_t ca = bi, cb = bj;
          better = std::make_pair(leading_label(a), leading_label(b)) <
                   std::make_pair(leading_label(ca), leading_label(cb));
        }
        if (better) {
          best = d;
          bi = a;
          bj = b;
        }
      }
    }
    std::size_t na_sz = clusters[bi].leaves.size(), nb_sz = clusters[bj].leaves.size();
    for (std::size_t k = 0; k < clusters.size(); ++k) {
      if (!clusters[k].alive || k == bi || k == bj) continue;
      double d = (static_cast<double>(na_sz) * dist[bi][k] +
                  static_cast<double>(nb_sz) * dist[bj][k]) /
                 static_cast<double>(na_sz + nb_sz);
      dist[bi][k] = dist[k][bi] = d;
    }
    clusters[bi].leaves.insert(clusters[bi].leaves.end(), clusters[bj].leaves.begin(),
                               clusters[bj].leaves.end());
    clusters[bj].alive = false;
    --alive;
  }
  for (const Cluster& c : clusters)
    if (c.alive) return c.leaves;
  return {};
}

void write_similarity_heatmap(const std::filesystem::path& csv_path, const SimilarityMatrix& sim,
                              HeatmapOrdering ordering) {
  std::vector<std::size_t> order(sim.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  if (ordering == HeatmapOrdering::seriation) order = seriation_order(sim);

  auto cell = [&](double v) { return std::isnan(v) ? std::string() : format_double(v); };

  std::string out = "language";
  for (std::size_t j : order) out += "," + sim.labels[j];
  out += "\n";
  for (std::size_t i : order) {
    out += sim.labels[i];
    for (std::size_t j : order) out += "," + cell(sim.at(i, j));
    out += "\n";
  }
  write_text_file_atomic(csv_path, out);

  std::filesystem::path support_path = csv_path;
  if (support_path.extension() == ".csv") support_path.replace_extension();
  support_path += ".support.csv";
  std::string sup = "language";
  for (std::size_t j : order) sup += "," + sim.labels[j];
  sup += "\n";
  for (std::size_t i : order) {
    sup += sim.labels[i];
    for (std::size_t j : order) sup += "," + std::to_string(sim.support_at(i, j));
    sup += "\n";
  }
  write_text_file_atomic(support_path, sup);

  json j;
  j["format"] = "kcx-similarity";
  j["format_version"] = kFormatVersion;
  j["kind"] = to_string(sim.kind);
  j["ordering"] = to_string(ordering);
  std::vector<std::string> labels;
  for (std::size_t i : order) labels.push_back(sim.labels[i]);
  j["labels"] = labels;
  j["support"] = support_path.filename().string();
  std::filesystem::path mp = csv_path;
  if (mp.extension() == ".csv") mp.replace_extension();
  mp += ".manifest.json";
  write_text_file_atomic(mp, j.dump(2) + "\n");
}

}  // namespace kcx
