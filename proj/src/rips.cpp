#include "shd/rips.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "shd/error.hpp"

namespace shd {

namespace {

void validate(const RipsParams& params) {
  if (std::isnan(params.scale) || params.scale < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "scale must be nonnegative");
  }
  if (params.max_dim < 0) throw Error(ErrorCode::InvalidArgument, "max_dim must be nonnegative");
}

// Forward neighbours (j > i, sorted) in the threshold graph d(i, j) <= scale.
std::vector<std::vector<VertexId>> threshold_graph(const PointCloud& cloud, double scale) {
  const std::size_t n = cloud.size();
  const std::vector<double> dist = pairwise_distances(cloud);
  std::vector<std::vector<VertexId>> nbrs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dist[condensed_index(n, i, j)] <= scale) nbrs[i].push_back(static_cast<VertexId>(j));
    }
  }
  return nbrs;
}

struct CliqueExpander {
  const std::vector<std::vector<VertexId>>& nbrs;
  std::size_t max_size;
  std::vector<std::vector<Simplex>>& out;

  void expand(std::vector<VertexId>& clique, const std::vector<VertexId>& candidates) {
    out[clique.size() - 1].push_back(Simplex::from_sorted(clique));
    if (clique.size() == max_size) return;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const VertexId u = candidates[c];
      const auto& nu = nbrs[u];
      std::vector<VertexId> next;
      std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(c) + 1, candidates.end(), nu.begin(),
                            nu.end(), std::back_inserter(next));
      clique.push_back(u);
      expand(clique, next);
      clique.pop_back();
    }
  }
};

}  // namespace

SimplicialComplex rips_complex(const PointCloud& cloud, const RipsParams& params) {
  validate(params);
  const std::size_t n = cloud.size();
  const std::size_t max_size = static_cast<std::size_t>(params.max_dim) + 1;
  const auto nbrs = threshold_graph(cloud, params.scale);

  // Cliques rooted at their smallest vertex; roots are independent.
  std::vector<std::vector<std::vector<Simplex>>> per_root(n);
  const auto roots = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t r = 0; r < roots; ++r) {
    auto& out = per_root[static_cast<std::size_t>(r)];
    out.resize(max_size);
    CliqueExpander expander{nbrs, max_size, out};
    std::vector<VertexId> clique{static_cast<VertexId>(r)};
    expander.expand(clique, nbrs[static_cast<std::size_t>(r)]);
  }

  std::vector<std::vector<Simplex>> faces(max_size);
  for (auto& root : per_root) {
    for (std::size_t k = 0; k < max_size; ++k) {
      std::move(root[k].begin(), root[k].end(), std::back_inserter(faces[k]));
    }
  }
  return SimplicialComplex::from_faces(std::move(faces));
}

LabeledComplex build_rips(const PointCloud& cloud, const RipsParams& params) {
  if (cloud.has_coincident_points()) {
    throw Error(ErrorCode::NonInjective, "point cloud has coincident points; apply quotient_coincident first");
  }
  SimplicialComplex complex = rips_complex(cloud, params);
  const std::size_t d = cloud.ambient_dim();
  return LabeledComplex(std::move(complex), d, std::vector<double>(cloud.flat().begin(), cloud.flat().end()));
}

std::vector<double> critical_values(const PointCloud& cloud, int max_dim) {
  if (max_dim < 0) throw Error(ErrorCode::InvalidArgument, "max_dim must be nonnegative");
  std::vector<double> values = pairwise_distances(cloud);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

QuotientResult quotient_coincident(const PointCloud& cloud) {
  const std::size_t d = cloud.ambient_dim();
  std::map<std::vector<double>, std::size_t> seen;
  std::vector<double> flat;
  QuotientResult result{cloud, {}, {}, {}};
  result.class_map.reserve(cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    auto p = cloud.point(i);
    auto [it, inserted] = seen.emplace(std::vector<double>(p.begin(), p.end()), result.multiplicity.size());
    if (inserted) {
      flat.insert(flat.end(), p.begin(), p.end());
      result.multiplicity.push_back(0);
      result.representative.push_back(i);
    }
    ++result.multiplicity[it->second];
    result.class_map.push_back(it->second);
  }
  result.cloud = PointCloud(d, std::move(flat));
  return result;
}

Filtration::Filtration(PointCloud cloud, int max_dim) : cloud_(std::move(cloud)), max_dim_(max_dim) {
  if (max_dim_ < 0) throw Error(ErrorCode::InvalidArgument, "max_dim must be nonnegative");
  if (cloud_.has_coincident_points()) {
    throw Error(ErrorCode::NonInjective, "filtration requires distinct points");
  }
  critical_values_ = shd::critical_values(cloud_, max_dim_);
}

LabeledComplex Filtration::level(double alpha) const {
  return build_rips(cloud_, RipsParams{alpha, max_dim_});
}

}  // namespace shd
