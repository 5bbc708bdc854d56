#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace shd {

/// An ordered, nonempty list of points in R^d with finite coordinates.
/// Points may coincide; see quotient_coincident().
class PointCloud {
 public:
  /// flat holds the points row-wise. Throws EmptyCloud or InvalidArgument.
  PointCloud(std::size_t ambient_dim, std::vector<double> flat);
  explicit PointCloud(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return coords_.size() / ambient_dim_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * ambient_dim_, ambient_dim_};
  }
  std::span<const double> flat() const { return coords_; }

  /// True when two points are exactly equal.
  bool has_coincident_points() const;

  friend bool operator==(const PointCloud&, const PointCloud&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<double> coords_;
};

/// Condensed upper-triangular pairwise distance matrix: entry for i < j sits at
/// index i*n - i*(i+1)/2 + (j - i - 1). OpenMP-parallel over rows.
std::vector<double> pairwise_distances(const PointCloud& cloud);
/// Serial reference for pairwise_distances().
std::vector<double> pairwise_distances_serial(const PointCloud& cloud);

inline std::size_t condensed_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace shd
