#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcx/activity.hpp"
#include "kcx/sparse.hpp"

namespace kcx {

// Revealed comparative advantage values. An entry is present exactly where
// the source activity matrix has an entry; structural zeros stay absent.
struct RcaMatrix {
  std::vector<std::string> languages;
  std::vector<std::string> articles;
  SparseRowMatrix<double> values;

  friend bool operator==(const RcaMatrix&, const RcaMatrix&) = default;
};

// Binary specialization matrix. bits(l,a) = 1 iff RCA >= threshold.
// Rows/columns emptied by thresholding are pruned (the downstream
// eigen-math cannot tolerate zero diversity/ubiquity).
struct AdvantageMatrix {
  std::vector<std::string> languages;
  std::vector<std::string> articles;
  SparseRowMatrix<std::uint8_t> bits;
  double threshold = 1.0;
  PruneReport prune_report;

  friend bool operator==(const AdvantageMatrix&, const AdvantageMatrix&) = default;
};

// RCA_la = (E_la / sum_a' E_la') / (sum_l' E_l'a / sum_l'a' E_l'a').
// Totals accumulate in 64-bit integers; ratios in double.
RcaMatrix compute_rca(const ActivityMatrix& m);

// Threshold is inclusive (RCA exactly at the threshold sets the bit).
AdvantageMatrix binarize(const RcaMatrix& rca, double threshold = 1.0);

// Digest of the canonical serialized form; used as provenance by the
// complexity scores.
std::string advantage_digest(const AdvantageMatrix& m);

}  // namespace kcx
