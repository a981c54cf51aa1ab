#include "kcx/complexity.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "kcx/csv.hpp"
#include "kcx/error.hpp"
#include "kcx/float_format.hpp"
#include "kcx/mathutil.hpp"
#include "kcx/version.hpp"

#include <nlohmann/json.hpp>

namespace kcx {

using nlohmann::json;

const char* to_string(ComplexityMethod m) {
  return m == ComplexityMethod::reflections ? "reflections" : "eigenvector";
}

ComplexityMethod complexity_method_from_string(const std::string& s) {
  if (s == "reflections") return ComplexityMethod::reflections;
  if (s == "eigenvector") return ComplexityMethod::eigenvector;
  throw Error(ErrorKind::usage, "unknown complexity method: '" + s + "'");
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> diversity_ubiquity(
    const AdvantageMatrix& m) {
  std::size_t nl = m.languages.size(), na = m.articles.size();
  if (nl == 0 || na == 0) throw_precondition("diversity_ubiquity: empty matrix");
  std::vector<std::int64_t> div(nl, 0), ub(na, 0);
  for (std::size_t r = 0; r < nl; ++r) {
    for (const auto& e : m.bits.row(r)) {
      div[r] += e.value;
      ub[static_cast<std::size_t>(e.col)] += e.value;
    }
  }
  for (std::size_t r = 0; r < nl; ++r)
    if (div[r] == 0)
      throw_precondition("diversity_ubiquity: unpruned zero row for language " + m.languages[r]);
  for (std::size_t c = 0; c < na; ++c)
    if (ub[c] == 0)
      throw_precondition("diversity_ubiquity: unpruned zero column for article " + m.articles[c]);
  return {std::move(div), std::move(ub)};
}

namespace {

// PCI comes from pushing the raw language scores through the article-side
// averaging operator D_a^-1 M^T; this is the article-space eigenvector for
// the same eigenvalue, and it keeps both methods' PCIs comparable.
std::vector<double> article_scores_from_language(const AdvantageMatrix& m,
                                                 const std::vector<std::int64_t>& ubiquity,
                                                 const std::vector<double>& language_raw) {
  std::vector<double> out(m.articles.size(), 0.0);
  for (std::size_t r = 0; r < m.bits.n_rows(); ++r)
    for (const auto& e : m.bits.row(r)) out[static_cast<std::size_t>(e.col)] += language_raw[r];
  for (std::size_t c = 0; c < out.size(); ++c) out[c] /= static_cast<double>(ubiquity[c]);
  return out;
}

// One flip decision, taken from the language side, applied to both score
// vectors. Falls back to "first nonzero component positive" when diversity
// carries no signal, so reruns stay bitwise identical.
void orient_scores(std::vector<double>& eci, std::vector<double>& pci,
                   const std::vector<std::int64_t>& diversity) {
  double dmean = 0;
  for (std::int64_t d : diversity) dmean += static_cast<double>(d);
  dmean /= static_cast<double>(diversity.size());
  double cov = 0;
  for (std::size_t i = 0; i < eci.size(); ++i)
    cov += eci[i] * (static_cast<double>(diversity[i]) - dmean);
  bool flip = false;
  if (cov < 0) {
    flip = true;
  } else if (cov == 0) {
    for (double v : eci) {
      if (v != 0) {
        flip = v < 0;
        break;
      }
    }
  }
  if (flip) {
    for (double& v : eci) v = -v;
    for (double& v : pci) v = -v;
  }
}

ComplexityScores make_scores(const AdvantageMatrix& m, std::vector<std::int64_t> div,
                             std::vector<std::int64_t> ub, std::vector<double> eci_raw,
                             ComplexityMethod method) {
  ComplexityScores s;
  s.languages = m.languages;
  s.articles = m.articles;
  s.method = method;
  s.diversity = std::move(div);
  s.ubiquity = std::move(ub);
  s.pci = article_scores_from_language(m, s.ubiquity, eci_raw);
  s.eci = std::move(eci_raw);
  standardize(s.eci);
  standardize(s.pci);
  orient_scores(s.eci, s.pci, s.diversity);
  s.source_digest = advantage_digest(m);
  return s;
}

}  // namespace

ComplexityScores eci_reflections(const AdvantageMatrix& m, int iterations, double tolerance) {
  if (iterations < 1) throw_precondition("eci_reflections: iterations must be >= 1");
  auto [div, ub] = diversity_ubiquity(m);
  std::size_t nl = m.languages.size(), na = m.articles.size();

  std::vector<double> kl(nl), ka(na);
  for (std::size_t r = 0; r < nl; ++r) kl[r] = static_cast<double>(div[r]);
  for (std::size_t c = 0; c < na; ++c) ka[c] = static_cast<double>(ub[c]);

  // One generation updates both sides from the previous generation.
  auto step = [&](const std::vector<double>& kl_in, const std::vector<double>& ka_in,
                  std::vector<double>& kl_out, std::vector<double>& ka_out) {
    kl_out.assign(nl, 0.0);
    ka_out.assign(na, 0.0);
    for (std::size_t r = 0; r < nl; ++r) {
      for (const auto& e : m.bits.row(r)) {
        kl_out[r] += ka_in[static_cast<std::size_t>(e.col)];
        ka_out[static_cast<std::size_t>(e.col)] += kl_in[r];
      }
    }
    for (std::size_t r = 0; r < nl; ++r) kl_out[r] /= static_cast<double>(div[r]);
    for (std::size_t c = 0; c < na; ++c) ka_out[c] /= static_cast<double>(ub[c]);
  };

  std::vector<double> prev_std = kl;
  standardize(prev_std);

  int used = 0;
  bool converged = false;
  std::vector<double> kl2(nl), ka2(na);
  while (used + 2 <= iterations) {
    step(kl, ka, kl2, ka2);
    step(kl2, ka2, kl, ka);
    used += 2;
    std::vector<double> cur_std = kl;
    standardize(cur_std);
    double delta = 0;
    for (std::size_t r = 0; r < nl; ++r) delta = std::max(delta, std::fabs(cur_std[r] - prev_std[r]));
    prev_std = std::move(cur_std);
    if (delta < tolerance) {
      converged = true;
      break;
    }
  }

  ComplexityScores s =
      make_scores(m, std::move(div), std::move(ub), kl, ComplexityMethod::reflections);
  s.iterations_used = used;
  s.converged = converged;
  s.tolerance = tolerance;
  return s;
}

ComplexityScores eci_eigen(const AdvantageMatrix& m) {
  auto [div, ub] = diversity_ubiquity(m);
  std::size_t nl = m.languages.size(), na = m.articles.size();
  if (nl < 2 || na < 2) throw_precondition("eci_eigen: need at least 2 languages and 2 articles");

  // M~ = D_l^-1 M D_a^-1 M^T is similar to the symmetric PSD matrix
  // A = D_l^-1/2 M D_a^-1 M^T D_l^-1/2; solve A and map back.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(nl),
                                            static_cast<Eigen::Index>(nl));
  std::vector<double> inv_sqrt_div(nl);
  for (std::size_t r = 0; r < nl; ++r) inv_sqrt_div[r] = 1.0 / std::sqrt(static_cast<double>(div[r]));

  SparseRowMatrix<std::uint8_t> bits_t = m.bits.transposed();
  for (std::size_t c = 0; c < na; ++c) {
    auto col = bits_t.row(c);
    double w = 1.0 / static_cast<double>(ub[c]);
    for (std::size_t i = 0; i < col.size(); ++i) {
      for (std::size_t j = i; j < col.size(); ++j) {
        std::size_t li = static_cast<std::size_t>(col[i].col);
        std::size_t lj = static_cast<std::size_t>(col[j].col);
        a(static_cast<Eigen::Index>(li), static_cast<Eigen::Index>(lj)) +=
            w * inv_sqrt_div[li] * inv_sqrt_div[lj];
      }
    }
  }
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = i + 1; j < nl; ++j)
      a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
          a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw_data("eci_eigen: eigensolver failed");
  const Eigen::VectorXd& evals = solver.eigenvalues();  // ascending
  Eigen::Index n = evals.size();

  std::vector<double> eci_raw(nl, 0.0);
  if (evals(n - 1) - evals(0) < 1e-12) {
    // Total symmetry (e.g. the identity matrix): every language is
    // equivalent, the tie rule maps everything to zero.
    ComplexityScores s =
        make_scores(m, std::move(div), std::move(ub), eci_raw, ComplexityMethod::eigenvector);
    s.converged = true;
    return s;
  }

  double l1 = evals(n - 1), l2 = evals(n - 2);
  if (l1 - l2 < 1e-9)
    throw_data("eci_eigen: degenerate spectrum, second eigenvalue " + format_double(l2) +
               " ties the leading eigenvalue " + format_double(l1));
  if (n >= 3 && l2 - evals(n - 3) < 1e-9)
    throw_data("eci_eigen: degenerate spectrum, second eigenvalue " + format_double(l2) +
               " ties the next eigenvalue " + format_double(evals(n - 3)));

  Eigen::VectorXd v = solver.eigenvectors().col(n - 2);
  for (std::size_t r = 0; r < nl; ++r)
    eci_raw[r] = v(static_cast<Eigen::Index>(r)) * inv_sqrt_div[r];

  ComplexityScores s =
      make_scores(m, std::move(div), std::move(ub), eci_raw, ComplexityMethod::eigenvector);
  s.converged = true;
  return s;
}

std::vector<std::pair<std::string, double>> rank_articles_by_pci(const ComplexityScores& scores,
                                                                 int top_n) {
  if (top_n < 1) throw_precondition("rank_articles_by_pci: top_n must be >= 1");
  std::vector<std::size_t> idx(scores.articles.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (scores.pci[a] != scores.pci[b]) return scores.pci[a] > scores.pci[b];
    return scores.articles[a] < scores.articles[b];
  });
  std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(top_n), idx.size());
  std::vector<std::pair<std::string, double>> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i)
    out.emplace_back(scores.articles[idx[i]], scores.pci[idx[i]]);
  return out;
}

void write_complexity_scores(const std::filesystem::path& prefix, const ComplexityScores& s) {
  std::filesystem::path lp = prefix, ap = prefix, mp = prefix;
  lp += ".languages.csv";
  ap += ".articles.csv";
  mp += ".manifest.json";

  std::string lout = "language,eci,diversity\n";
  for (std::size_t i = 0; i < s.languages.size(); ++i)
    lout += s.languages[i] + "," + format_double(s.eci[i]) + "," + std::to_string(s.diversity[i]) +
            "\n";
  write_text_file_atomic(lp, lout);

  std::string aout = "article,pci,ubiquity\n";
  for (std::size_t i = 0; i < s.articles.size(); ++i)
    aout += s.articles[i] + "," + format_double(s.pci[i]) + "," + std::to_string(s.ubiquity[i]) +
            "\n";
  write_text_file_atomic(ap, aout);

  json j;
  j["format"] = "kcx-complexity";
  j["format_version"] = kFormatVersion;
  j["method"] = to_string(s.method);
  j["iterations_used"] = s.iterations_used;
  j["converged"] = s.converged;
  j["tolerance"] = s.tolerance;
  j["source_digest"] = s.source_digest;
  write_text_file_atomic(mp, j.dump(2) + "\n");
}

ComplexityScores read_complexity_scores(const std::filesystem::path& prefix) {
  std::filesystem::path lp = prefix, ap = prefix, mp = prefix;
  lp += ".languages.csv";
  ap += ".articles.csv";
  mp += ".manifest.json";

  ComplexityScores s;
  json j;
  try {
    j = json::parse(read_text_file(mp));
  } catch (const json::exception& e) {
    throw_data("complexity manifest " + mp.string() + ": " + e.what());
  }
  if (j.value("format", "") != "kcx-complexity")
    throw_data("complexity manifest " + mp.string() + ": wrong format tag");
  s.method = complexity_method_from_string(j.at("method").get<std::string>());
  s.iterations_used = j.at("iterations_used").get<int>();
  s.converged = j.at("converged").get<bool>();
  s.tolerance = j.at("tolerance").get<double>();
  s.source_digest = j.at("source_digest").get<std::string>();

  std::vector<CsvRow> lrows = read_csv_file(lp);
  require_header(lrows.at(0), {"language", "eci", "diversity"}, lp.string());
  for (std::size_t i = 1; i < lrows.size(); ++i) {
    const auto& f = lrows[i].fields;
    if (f.size() != 3) throw_data(lp.string() + ": expected 3 fields");
    s.languages.push_back(f[0]);
    s.eci.push_back(parse_double(f[1], "eci"));
    s.diversity.push_back(parse_int64(f[2], "diversity"));
  }
  std::vector<CsvRow> arows = read_csv_file(ap);
  require_header(arows.at(0), {"article", "pci", "ubiquity"}, ap.string());
  for (std::size_t i = 1; i < arows.size(); ++i) {
    const auto& f = arows[i].fields;
    if (f.size() != 3) throw_data(ap.string() + ": expected 3 fields");
    s.articles.push_back(f[0]);
    s.pci.push_back(parse_double(f[1], "pci"));
    s.ubiquity.push_back(parse_int64(f[2], "ubiquity"));
  }
  return s;
}

void write_pci_ranking_csv(const std::filesystem::path& path,
                           const std::vector<std::pair<std::string, double>>& ranking) {
  std::string out = "rank,article,pci\n";
  for (std::size_t i = 0; i < ranking.size(); ++i)
    out += std::to_string(i + 1) + "," + ranking[i].first + "," + format_double(ranking[i].second) +
           "\n";
  write_text_file_atomic(path, out);
}

}  // namespace kcx
