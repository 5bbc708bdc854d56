#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "shd/complex.hpp"
#include "shd/extended_distance.hpp"
#include "shd/point_cloud.hpp"

namespace shd {

// Point-cloud CSV: one point per row, comma-separated decimals, optional header.

PointCloud parse_point_cloud(std::istream& in, bool header);
/// Throws IoError, EmptyFile, RaggedRows, NonNumericCell.
PointCloud load_point_cloud(const std::filesystem::path& path, bool header);

// Complex document:
//   {"ambient_dim": d,
//    "vertices": [{"id": int, "coords": [d numbers]}, ...],
//    "simplices": [[int, ...], ...]}
// "simplices" lists generators; loading applies the downward closure.

/// A parsed complex document whose coordinate map has not been checked for
/// injectivity.
struct ComplexDocument {
  std::size_t ambient_dim;
  SimplicialComplex complex;
  std::map<VertexId, std::vector<double>> coords;
};

/// Throws ParseError, UnknownVertexInSimplex, EmptyComplex.
ComplexDocument parse_complex_document(const nlohmann::json& doc);
ComplexDocument load_complex_document(const std::filesystem::path& path);
/// load_complex_document() plus the injectivity check (NonInjective).
LabeledComplex load_complex(const std::filesystem::path& path);

/// Writes maximal faces only.
nlohmann::json complex_to_json(const SimplicialComplex& complex, std::size_t ambient_dim,
                               const std::map<VertexId, std::vector<double>>& coords);
nlohmann::json complex_to_json(const LabeledComplex& complex);

/// A number, or the string "inf".
nlohmann::json distance_to_json(ExtendedDistance d);

}  // namespace shd
