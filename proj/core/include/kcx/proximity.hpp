#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "kcx/rca.hpp"
#include "kcx/sparse.hpp"

namespace kcx {

// Article-article co-specialization, phi_aa' = |co-advantage| / max ubiquity.
// Symmetric, in [0,1], diagonal exactly 1. Stored sparsely including the
// diagonal.
struct ProximityMatrix {
  std::vector<std::string> articles;
  SparseRowMatrix<double> values;

  double at(std::size_t i, std::size_t j) const { return values.get(i, j); }
};

ProximityMatrix proximity(const AdvantageMatrix& m);

// omega_la = sum_{a'!=a} M_la' phi_a'a / sum_{a'!=a} phi_a'a, the fraction
// of an article's neighborhood the language already specializes in.
// Articles with no off-diagonal proximity yield 0 by convention.
double relatedness_density(const AdvantageMatrix& m, const ProximityMatrix& phi,
                           const std::string& language, const std::string& article);

// omega for one language across every article; used by the prediction
// harness. Indices follow phi.articles.
std::vector<double> relatedness_density_row(const AdvantageMatrix& m, const ProximityMatrix& phi,
                                            std::size_t language_index);

void write_proximity_csv(const std::filesystem::path& path, const ProximityMatrix& phi);

}  // namespace kcx
