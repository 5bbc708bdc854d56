#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "shd/simplex.hpp"

namespace shd {

/// A finite abstract simplicial complex, stored as one sorted simplex list per
/// dimension. Downward closure is checked when the complex is assembled.
///
/// A default-constructed complex is empty. The library only produces empty
/// complexes as links of isolated vertices; every public constructor that
/// takes user input rejects them.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// faces_by_dim[k] holds the k-simplices (any order, duplicates allowed).
  /// Throws InvalidSimplex when a simplex sits in the wrong slot and
  /// NotDownwardClosed when a facet is missing.
  static SimplicialComplex from_faces(std::vector<std::vector<Simplex>> faces_by_dim);

  bool empty() const { return faces_.empty(); }
  /// Largest k with a k-simplex; -1 for the empty complex.
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  std::span<const Simplex> simplices(int k) const;
  std::span<const VertexId> vertex_ids() const { return vertex_ids_; }
  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t size() const;

  bool contains(const Simplex& s) const;
  bool has_vertex(VertexId v) const;

  /// Simplices that are not a proper face of another simplex, ordered by
  /// dimension and then lexicographically.
  std::vector<Simplex> maximal_faces() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::vector<Simplex>> faces_;
  std::vector<VertexId> vertex_ids_;
};

/// Downward closure of the generators. Throws EmptyComplex for an empty list.
SimplicialComplex closure(std::span<const Simplex> generators);

/// The k-dimensional faces; empty when k > dim(K). Throws InvalidArgument for k < 0.
std::span<const Simplex> k_simplices(const SimplicialComplex& complex, int k);

/// Euclidean distance between two points of equal length. Every distance in
/// the library goes through this function so that independent routes to the
/// same quantity agree bit for bit.
double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// A complex together with an injective coordinate map vertex -> R^d.
class LabeledComplex {
 public:
  /// Throws EmptyComplex, InvalidArgument (coords not total on the vertex set,
  /// extra ids, wrong arity, non-finite values) or NonInjective.
  LabeledComplex(SimplicialComplex complex, std::size_t ambient_dim,
                 const std::map<VertexId, std::vector<double>>& coords);

  /// Coordinates given row-wise in vertex_ids() order.
  LabeledComplex(SimplicialComplex complex, std::size_t ambient_dim, std::vector<double> flat_coords);

  const SimplicialComplex& complex() const { return complex_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t vertex_count() const { return complex_.vertex_count(); }
  int dimension() const { return complex_.dimension(); }

  /// Position of v within vertex_ids(). Throws VertexNotFound.
  std::size_t vertex_index(VertexId v) const;
  std::span<const double> coord(VertexId v) const { return coord_at(vertex_index(v)); }
  std::span<const double> coord_at(std::size_t index) const {
    return {coords_.data() + index * ambient_dim_, ambient_dim_};
  }
  std::span<const double> flat_coords() const { return coords_; }

 private:
  void validate() const;

  SimplicialComplex complex_;
  std::size_t ambient_dim_ = 0;
  std::vector<double> coords_;
};

/// True iff some bijection of vertex sets preserves coordinates exactly and
/// maps the simplices of a onto those of b. Throws AmbientDimMismatch.
bool is_isomorphic(const LabeledComplex& a, const LabeledComplex& b);

}  // namespace shd
