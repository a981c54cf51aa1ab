#pragma once

#include <filesystem>

#include "kcx/activity.hpp"
#include "kcx/rca.hpp"

namespace kcx {

// Matrix interchange: UTF-8 CSV triplets plus a sidecar JSON manifest
// carrying the indices, slice metadata and prune report. Triplets are
// emitted in (language, article) lexicographic order; floats use the
// shortest round-trip decimal form. The same convention covers activity,
// RCA and advantage matrices; the manifest's "kind" tells them apart.

// foo.csv -> foo.manifest.json
std::filesystem::path manifest_path_for(const std::filesystem::path& csv_path);

void write_activity_matrix(const std::filesystem::path& csv_path, const ActivityMatrix& m);
ActivityMatrix read_activity_matrix(const std::filesystem::path& csv_path);

void write_rca_matrix(const std::filesystem::path& csv_path, const RcaMatrix& m);
RcaMatrix read_rca_matrix(const std::filesystem::path& csv_path);

void write_advantage_matrix(const std::filesystem::path& csv_path, const AdvantageMatrix& m);
AdvantageMatrix read_advantage_matrix(const std::filesystem::path& csv_path);

}  // namespace kcx
