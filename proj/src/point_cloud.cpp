#include "shd/point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "shd/complex.hpp"
#include "shd/error.hpp"

namespace shd {

PointCloud::PointCloud(std::size_t ambient_dim, std::vector<double> flat)
    : ambient_dim_(ambient_dim), coords_(std::move(flat)) {
  if (ambient_dim_ == 0) throw Error(ErrorCode::InvalidArgument, "ambient dimension must be positive");
  if (coords_.empty()) throw Error(ErrorCode::EmptyCloud, "point cloud has no points");
  if (coords_.size() % ambient_dim_ != 0) {
    throw Error(ErrorCode::InvalidArgument, "coordinate count is not a multiple of the ambient dimension");
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "non-finite coordinate");
  }
}

namespace {

std::vector<double> flatten(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw Error(ErrorCode::EmptyCloud, "point cloud has no points");
  const std::size_t d = rows.front().size();
  std::vector<double> flat;
  flat.reserve(rows.size() * d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != d) {
      throw Error(ErrorCode::InvalidArgument, "point " + std::to_string(i) + " has " +
                                                  std::to_string(rows[i].size()) + " coordinates, expected " +
                                                  std::to_string(d));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return flat;
}

}  // namespace

PointCloud::PointCloud(const std::vector<std::vector<double>>& rows)
    : PointCloud(rows.empty() ? 1 : rows.front().size(), flatten(rows)) {}

bool PointCloud::has_coincident_points() const {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto less = [&](std::size_t i, std::size_t j) {
    auto a = point(i), b = point(j);
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!less(order[i - 1], order[i])) return true;
  }
  return false;
}

std::vector<double> pairwise_distances(const PointCloud& cloud) {
  const std::size_t n = cloud.size();
  std::vector<double> out(n * (n - 1) / 2);
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const std::size_t base = condensed_index(n, i, i + 1);
    for (std::size_t j = i + 1; j < n; ++j) {
      out[base + (j - i - 1)] = euclidean_distance(cloud.point(i), cloud.point(j));
    }
  }
  return out;
}

std::vector<double> pairwise_distances_serial(const PointCloud& cloud) {
  const std::size_t n = cloud.size();
  std::vector<double> out;
  out.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(euclidean_distance(cloud.point(i), cloud.point(j)));
  }
  return out;
}

}  // namespace shd
