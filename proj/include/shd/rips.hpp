#pragma once

#include <cstddef>
#include <vector>

#include "shd/complex.hpp"
#include "shd/point_cloud.hpp"

namespace shd {

struct RipsParams {
  double scale = 0.0;  // edge iff distance <= scale
  int max_dim = 2;     // skeleton cap
};

/// Vietoris-Rips complex of the cloud; vertex i is point i. Coincident points
/// are allowed here (they become distinct vertices at distance 0).
/// Throws InvalidArgument for a negative/NaN scale or negative max_dim.
SimplicialComplex rips_complex(const PointCloud& cloud, const RipsParams& params);

/// rips_complex() labelled by the cloud's coordinates. Throws NonInjective
/// when points coincide; quotient the cloud first.
LabeledComplex build_rips(const PointCloud& cloud, const RipsParams& params);

/// Sorted distinct pairwise distances. VR(cloud, alpha) is constant on each
/// [c_i, c_{i+1}) and below c_0.
std::vector<double> critical_values(const PointCloud& cloud, int max_dim);

struct QuotientResult {
  PointCloud cloud;                        // one point per class, in first-occurrence order
  std::vector<std::size_t> multiplicity;   // per quotient index, >= 1
  std::vector<std::size_t> class_map;      // original index -> quotient index
  std::vector<std::size_t> representative; // quotient index -> first original index
};

/// Identifies exactly equal points.
QuotientResult quotient_coincident(const PointCloud& cloud);

/// The Rips filtration of a cloud of distinct points, truncated at max_dim.
class Filtration {
 public:
  /// Throws NonInjective, InvalidArgument.
  Filtration(PointCloud cloud, int max_dim);

  const PointCloud& cloud() const { return cloud_; }
  int max_dim() const { return max_dim_; }
  std::size_t ambient_dim() const { return cloud_.ambient_dim(); }
  const std::vector<double>& critical_values() const { return critical_values_; }

  /// The complex at scale alpha >= 0. alpha = 0 is the vertices-only level.
  LabeledComplex level(double alpha) const;

 private:
  PointCloud cloud_;
  int max_dim_;
  std::vector<double> critical_values_;
};

}  // namespace shd
