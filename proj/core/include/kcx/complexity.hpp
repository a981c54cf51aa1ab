#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "kcx/rca.hpp"

namespace kcx {

enum class ComplexityMethod { reflections, eigenvector };

const char* to_string(ComplexityMethod m);
ComplexityMethod complexity_method_from_string(const std::string& s);

// Standardized complexity scores (mean 0, unit population variance) for
// languages (ECI) and articles (PCI), plus the raw diversity/ubiquity
// degrees they derive from. Sign is oriented so that ECI correlates
// nonnegatively with diversity; PCI shares the same flip so the two stay
// coupled across methods.
struct ComplexityScores {
  std::vector<std::string> languages;
  std::vector<std::string> articles;
  std::vector<double> eci;
  std::vector<double> pci;
  std::vector<std::int64_t> diversity;
  std::vector<std::int64_t> ubiquity;
  ComplexityMethod method = ComplexityMethod::eigenvector;
  int iterations_used = 0;
  bool converged = true;
  double tolerance = 0.0;
  std::string source_digest;  // advantage_digest of the input matrix
};

// Row/column sums of the advantage matrix. The matrix must be pruned:
// a zero diversity or ubiquity is a precondition error.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> diversity_ubiquity(
    const AdvantageMatrix& m);

// Method of reflections: alternating neighbor averages starting from
// (diversity, ubiquity), checked every even generation against the
// previous even generation in max-norm after standardization.
// Non-convergence inside `iterations` is reported via converged=false,
// not an error.
ComplexityScores eci_reflections(const AdvantageMatrix& m, int iterations = 200,
                                 double tolerance = 1e-10);

// Spectral formulation: ECI is the eigenvector for the second-largest
// eigenvalue of M~_ll' = (1/k_l0) sum_a M_la M_l'a / k_a0, solved through
// the symmetric similarity transform (deterministic dense solve). A fully
// degenerate spectrum (all eigenvalues equal) is total symmetry and maps
// to all-zero scores; a second eigenvalue within 1e-9 of a neighbor is a
// degenerate-spectrum error.
ComplexityScores eci_eigen(const AdvantageMatrix& m);

// Articles in strictly descending PCI, ties broken by article id.
std::vector<std::pair<std::string, double>> rank_articles_by_pci(const ComplexityScores& scores,
                                                                 int top_n);

// <prefix>.languages.csv, <prefix>.articles.csv, <prefix>.manifest.json
void write_complexity_scores(const std::filesystem::path& prefix, const ComplexityScores& s);
ComplexityScores read_complexity_scores(const std::filesystem::path& prefix);

void write_pci_ranking_csv(const std::filesystem::path& path,
                           const std::vector<std::pair<std::string, double>>& ranking);

}  // namespace kcx
