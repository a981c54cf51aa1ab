#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "kcx/activity.hpp"
#include "kcx/rca.hpp"

namespace kcx {

enum class SimilarityKind { portfolio_cosine, log_rca_pearson };
enum class HeatmapOrdering { input, seriation };

const char* to_string(SimilarityKind k);
const char* to_string(HeatmapOrdering o);

// Dense symmetric language-by-language similarity. Undefined pairs carry
// NaN and serialize as empty cells; 0 is a meaningful value and is never
// used as a sentinel.
struct SimilarityMatrix {
  std::vector<std::string> labels;
  std::vector<double> values;         // n*n row-major
  std::vector<std::int64_t> support;  // articles used per pair
  SimilarityKind kind = SimilarityKind::portfolio_cosine;

  std::size_t size() const { return labels.size(); }
  double at(std::size_t i, std::size_t j) const { return values[i * size() + j]; }
  std::int64_t support_at(std::size_t i, std::size_t j) const { return support[i * size() + j]; }
};

// Cosine of raw edit-count vectors over the shared article index.
SimilarityMatrix portfolio_cosine(const ActivityMatrix& m);

// Same construction on RCA vectors (specialization portfolios).
SimilarityMatrix portfolio_cosine_rca(const RcaMatrix& m);

// Pearson correlation of log RCA profiles over the intersection of
// positive support. Pairs with support < 3 or zero variance are undefined.
// epsilon > 0 switches to union support with absent entries padded to
// epsilon (robustness runs only).
SimilarityMatrix log_rca_pearson(const RcaMatrix& rca, double epsilon = 0.0);

// Leaf order of a deterministic average-linkage clustering on
// (1 - similarity); undefined pairs count as distance 1. Lexicographic
// tie-breaks throughout.
std::vector<std::size_t> seriation_order(const SimilarityMatrix& sim);

// Square CSV with label header row/column plus support CSV and JSON
// manifest. Seriation reorders rows/columns for block-visible output.
void write_similarity_heatmap(const std::filesystem::path& csv_path, const SimilarityMatrix& sim,
                              HeatmapOrdering ordering);

}  // namespace kcx
