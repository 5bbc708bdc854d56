#include "shd/distance.hpp"

#include <algorithm>
#include <limits>

#include "shd/error.hpp"

namespace shd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void require_same_ambient(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::AmbientDimMismatch, std::to_string(a) + " vs " + std::to_string(b));
  }
}

// Some dimension occupied in a but empty in b makes the min over tau empty.
bool has_unmatched_dimension(const LabeledComplex& a, const LabeledComplex& b) {
  return a.dimension() > b.dimension();
}

// Simplices of one dimension as rows of local vertex indices.
struct IndexedSimplices {
  std::size_t width = 0;
  std::vector<std::uint32_t> rows;

  std::size_t count() const { return width == 0 ? 0 : rows.size() / width; }
  const std::uint32_t* row(std::size_t i) const { return rows.data() + i * width; }
};

IndexedSimplices index_simplices(const LabeledComplex& lc, int k) {
  IndexedSimplices out;
  out.width = static_cast<std::size_t>(k) + 1;
  auto ids = lc.complex().vertex_ids();
  auto faces = lc.complex().simplices(k);
  out.rows.reserve(faces.size() * out.width);
  for (const Simplex& s : faces) {
    for (VertexId v : s.vertices()) {
      out.rows.push_back(static_cast<std::uint32_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin()));
    }
  }
  return out;
}

// Fill in v and w for a chosen (sigma, tau). dist(i, j) is the distance
// between local vertex i of the source and local vertex j of the target.
template <typename DistFn>
Witness make_witness(const LabeledComplex& a, const LabeledComplex& b, int k, const Simplex& sigma,
                     const Simplex& tau, DistFn dist) {
  double best_outer = -1.0;
  VertexId best_v = sigma[0];
  VertexId best_w = tau[0];
  for (VertexId v : sigma.vertices()) {
    const std::size_t iv = a.vertex_index(v);
    double inner = kInf;
    VertexId arg_w = tau[0];
    for (VertexId w : tau.vertices()) {
      const double d = dist(iv, b.vertex_index(w));
      if (d < inner) {
        inner = d;
        arg_w = w;
      }
    }
    if (inner > best_outer) {
      best_outer = inner;
      best_v = v;
      best_w = arg_w;
    }
  }
  return Witness{k, sigma, tau, best_v, best_w};
}

}  // namespace

DirectedResult directed_distance(const LabeledComplex& a, const LabeledComplex& b) {
  require_same_ambient(a.ambient_dim(), b.ambient_dim());
  if (has_unmatched_dimension(a, b)) return {ExtendedDistance::infinity(), std::nullopt};

  const std::size_t n = a.vertex_count();
  const std::size_t m = b.vertex_count();
  std::vector<double> dist(n * m);
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < m; ++j) dist[i * m + j] = euclidean_distance(a.coord_at(i), b.coord_at(j));
  }

  double overall = -1.0;
  int arg_k = 0;
  std::size_t arg_sigma = 0;
  std::size_t arg_tau = 0;

  for (int k = 0; k <= a.dimension(); ++k) {
    const IndexedSimplices src = index_simplices(a, k);
    const IndexedSimplices dst = index_simplices(b, k);
    const std::size_t width = src.width;
    const std::size_t ns = src.count();
    const std::size_t nt = dst.count();

    std::vector<double> value(ns, kInf);
    std::vector<std::size_t> partner(ns, kNone);
    const auto sigmas = static_cast<std::ptrdiff_t>(ns);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t si = 0; si < sigmas; ++si) {
      const std::uint32_t* sigma = src.row(static_cast<std::size_t>(si));
      double best = kInf;
      std::size_t best_tau = kNone;
      for (std::size_t t = 0; t < nt; ++t) {
        const std::uint32_t* tau = dst.row(t);
        double outer = 0.0;
        for (std::size_t p = 0; p < width && outer < best; ++p) {
          const double* drow = dist.data() + static_cast<std::size_t>(sigma[p]) * m;
          double inner = kInf;
          for (std::size_t q = 0; q < width; ++q) inner = std::min(inner, drow[tau[q]]);
          outer = std::max(outer, inner);
        }
        // outer >= best means tau cannot strictly improve on the current partner.
        if (outer < best) {
          best = outer;
          best_tau = t;
        }
      }
      value[static_cast<std::size_t>(si)] = best;
      partner[static_cast<std::size_t>(si)] = best_tau;
    }

    for (std::size_t s = 0; s < ns; ++s) {
      if (value[s] > overall) {
        overall = value[s];
        arg_k = k;
        arg_sigma = s;
        arg_tau = partner[s];
      }
    }
  }

  const Simplex& sigma = a.complex().simplices(arg_k)[arg_sigma];
  const Simplex& tau = b.complex().simplices(arg_k)[arg_tau];
  Witness witness = make_witness(a, b, arg_k, sigma, tau,
                                 [&](std::size_t i, std::size_t j) { return dist[i * m + j]; });
  return {ExtendedDistance(overall), std::move(witness)};
}

DirectedResult directed_distance_serial(const LabeledComplex& a, const LabeledComplex& b) {
  require_same_ambient(a.ambient_dim(), b.ambient_dim());

  double overall = -1.0;
  const Simplex* arg_sigma = nullptr;
  const Simplex* arg_tau = nullptr;
  int arg_k = 0;

  for (int k = 0; k <= a.dimension(); ++k) {
    auto taus = b.complex().simplices(k);
    for (const Simplex& sigma : a.complex().simplices(k)) {
      double best = kInf;
      const Simplex* best_tau = nullptr;
      for (const Simplex& tau : taus) {
        double outer = 0.0;
        for (VertexId v : sigma.vertices()) {
          double inner = kInf;
          for (VertexId w : tau.vertices()) inner = std::min(inner, euclidean_distance(a.coord(v), b.coord(w)));
          outer = std::max(outer, inner);
        }
        if (outer < best) {
          best = outer;
          best_tau = &tau;
        }
      }
      if (best_tau == nullptr) return {ExtendedDistance::infinity(), std::nullopt};
      if (best > overall) {
        overall = best;
        arg_k = k;
        arg_sigma = &sigma;
        arg_tau = best_tau;
      }
    }
  }

  Witness witness = make_witness(a, b, arg_k, *arg_sigma, *arg_tau, [&](std::size_t i, std::size_t j) {
    return euclidean_distance(a.coord_at(i), b.coord_at(j));
  });
  return {ExtendedDistance(overall), std::move(witness)};
}

HausdorffResult simplicial_hausdorff_detail(const LabeledComplex& a, const LabeledComplex& b) {
  HausdorffResult r{ExtendedDistance{}, directed_distance(a, b), directed_distance(b, a)};
  r.distance = std::max(r.ab.value, r.ba.value);
  return r;
}

ExtendedDistance simplicial_hausdorff(const LabeledComplex& a, const LabeledComplex& b) {
  return simplicial_hausdorff_detail(a, b).distance;
}

double classical_directed_hausdorff(const PointCloud& p, const PointCloud& q) {
  require_same_ambient(p.ambient_dim(), q.ambient_dim());
  double outer = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    double inner = kInf;
    for (std::size_t j = 0; j < q.size(); ++j) inner = std::min(inner, euclidean_distance(p.point(i), q.point(j)));
    outer = std::max(outer, inner);
  }
  return outer;
}

double classical_hausdorff(const PointCloud& p, const PointCloud& q) {
  return std::max(classical_directed_hausdorff(p, q), classical_directed_hausdorff(q, p));
}

namespace {

void require_compatible(const Filtration& a, const Filtration& b) {
  require_same_ambient(a.ambient_dim(), b.ambient_dim());
  if (a.max_dim() != b.max_dim()) {
    throw Error(ErrorCode::MaxDimMismatch, std::to_string(a.max_dim()) + " vs " + std::to_string(b.max_dim()));
  }
}

}  // namespace

std::vector<double> filtration_levels(const Filtration& a, const Filtration& b) {
  std::vector<double> levels{0.0};
  std::merge(a.critical_values().begin(), a.critical_values().end(), b.critical_values().begin(),
             b.critical_values().end(), std::back_inserter(levels));
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

ExtendedDistance filtered_directed(const Filtration& a, const Filtration& b) {
  require_compatible(a, b);
  ExtendedDistance sup;
  for (double alpha : filtration_levels(a, b)) {
    sup = std::max(sup, directed_distance(a.level(alpha), b.level(alpha)).value);
    if (sup.is_infinite()) break;
  }
  return sup;
}

FilteredResult filtered_hausdorff_detail(const Filtration& a, const Filtration& b) {
  require_compatible(a, b);
  FilteredResult r{ExtendedDistance{}, ExtendedDistance{}, ExtendedDistance{}, filtration_levels(a, b)};
  for (double alpha : r.levels) {
    const LabeledComplex la = a.level(alpha);
    const LabeledComplex lb = b.level(alpha);
    if (r.directed_ab.is_finite()) r.directed_ab = std::max(r.directed_ab, directed_distance(la, lb).value);
    if (r.directed_ba.is_finite()) r.directed_ba = std::max(r.directed_ba, directed_distance(lb, la).value);
  }
  r.distance = std::max(r.directed_ab, r.directed_ba);
  return r;
}

ExtendedDistance filtered_hausdorff(const Filtration& a, const Filtration& b) {
  return filtered_hausdorff_detail(a, b).distance;
}

}  // namespace shd
