#pragma once

#include <optional>
#include <vector>

#include "shd/complex.hpp"
#include "shd/extended_distance.hpp"
#include "shd/point_cloud.hpp"
#include "shd/rips.hpp"

namespace shd {

/// The chain of choices realising a finite directed distance: sigma is the
/// k-simplex of the source attaining the outer max, tau its closest
/// k-simplex in the target, v the vertex of sigma attaining the inner max and
/// w the vertex of tau nearest to v. value == euclidean_distance(f(v), g(w)).
struct Witness {
  int dimension;
  Simplex sigma;
  Simplex tau;
  VertexId v;
  VertexId w;
};

struct DirectedResult {
  ExtendedDistance value;
  std::optional<Witness> witness;  // present iff value is finite
};

/// Directed simplicial distance from a to b:
///
///   max_k max_{sigma in a, dim k} min_{tau in b, dim k} max_{v in sigma} min_{w in tau} |f(v) - g(w)|
///
/// The min over an empty set of k-simplices in b is +inf. Ties resolve to the
/// lowest dimension, then the lexicographically smallest simplex, then the
/// first vertex, so the witness does not depend on thread scheduling.
/// OpenMP-parallel over the simplices of a. Throws AmbientDimMismatch.
DirectedResult directed_distance(const LabeledComplex& a, const LabeledComplex& b);

/// Serial reference for directed_distance(): the plain quadruple loop with no
/// precomputation or pruning. Returns identical values and witnesses.
DirectedResult directed_distance_serial(const LabeledComplex& a, const LabeledComplex& b);

struct HausdorffResult {
  ExtendedDistance distance;
  DirectedResult ab;
  DirectedResult ba;
};

HausdorffResult simplicial_hausdorff_detail(const LabeledComplex& a, const LabeledComplex& b);
/// max of the two directed distances.
ExtendedDistance simplicial_hausdorff(const LabeledComplex& a, const LabeledComplex& b);

/// max_{p in P} min_{q in Q} |p - q|. Throws AmbientDimMismatch.
double classical_directed_hausdorff(const PointCloud& p, const PointCloud& q);
double classical_hausdorff(const PointCloud& p, const PointCloud& q);

/// One representative scale per constancy interval of both filtrations:
/// 0 (vertices only) followed by the merged sorted critical values.
std::vector<double> filtration_levels(const Filtration& a, const Filtration& b);

struct FilteredResult {
  ExtendedDistance distance;
  ExtendedDistance directed_ab;
  ExtendedDistance directed_ba;
  std::vector<double> levels;
};

/// sup over alpha of the directed distance between the levels at alpha.
/// Throws AmbientDimMismatch, MaxDimMismatch.
ExtendedDistance filtered_directed(const Filtration& a, const Filtration& b);
FilteredResult filtered_hausdorff_detail(const Filtration& a, const Filtration& b);
ExtendedDistance filtered_hausdorff(const Filtration& a, const Filtration& b);

}  // namespace shd
