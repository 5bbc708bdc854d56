#pragma once

#include <vector>

#include "shd/complex.hpp"
#include "shd/rips.hpp"
#include "shd/verify.hpp"

namespace shd {

/// {sigma in K : v not in sigma, sigma + v in K}. Empty for an isolated
/// vertex. Throws VertexNotFound.
SimplicialComplex link(const SimplicialComplex& complex, VertexId v);

/// Vertices w of L with sigma + w in L for every sigma in L. Empty for an
/// empty L.
std::vector<VertexId> cone_apexes(const SimplicialComplex& complex);

struct Domination {
  VertexId vertex;
  VertexId apex;
  friend bool operator==(const Domination&, const Domination&) = default;
};

/// All (v, w) with link(K, v) a cone with apex w, sorted by (v, w).
std::vector<Domination> dominated_vertices(const SimplicialComplex& complex);

/// True iff link(K, v) is a cone with apex w.
bool is_dominated_by(const SimplicialComplex& complex, VertexId v, VertexId w);

/// Full subcomplex on the vertices other than v. Throws VertexNotFound,
/// LastVertex.
SimplicialComplex remove_vertex(const SimplicialComplex& complex, VertexId v);

struct CollapseTrace {
  std::vector<Domination> steps;
  SimplicialComplex final;
};

/// Removes the lowest-id dominated vertex (paired with its lowest apex) until
/// no vertex is dominated.
CollapseTrace strong_collapse_core(const SimplicialComplex& complex);

struct QuotientEquivalenceReport {
  QuotientResult quotient;
  CollapseTrace trace;            // one step per removed duplicate, apex = class representative
  bool duplicates_dominated;      // every step was a valid elementary strong collapse
  bool isomorphic;                // collapsed complex ~= VR of the quotient cloud
  BettiVector betti_original;
  BettiVector betti_quotient;

  bool betti_match() const { return betti_original == betti_quotient; }
  bool ok() const { return duplicates_dominated && isomorphic && betti_match(); }
};

/// Collapses every duplicate point of VR(cloud, params) onto its class
/// representative and compares the result with VR of the quotient cloud.
QuotientEquivalenceReport verify_quotient_equivalence(const PointCloud& cloud, const RipsParams& params);

}  // namespace shd
