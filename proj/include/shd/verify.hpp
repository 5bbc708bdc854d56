#pragma once

// Independent, deliberately naive oracles. Nothing here calls the distance
// engine; the tests compare the two.

#include <vector>

#include "shd/complex.hpp"
#include "shd/extended_distance.hpp"

namespace shd {

/// Literal evaluation of epsilon-closeness: for every k-simplex sigma of a
/// there is a k-simplex tau of b such that every vertex of sigma has a vertex
/// of tau strictly closer than eps. Throws NonPositiveEps, AmbientDimMismatch.
bool eps_close_predicate(const LabeledComplex& a, const LabeledComplex& b, double eps);

/// inf{eps > 0 : a is eps-close to b}, found by scanning the finite set of
/// vertex-image distances in increasing order and testing the predicate just
/// above each candidate. +inf when no eps works.
ExtendedDistance directed_by_sweep(const LabeledComplex& a, const LabeledComplex& b);

/// beta_k for k = 0..max_k over GF(2).
struct BettiVector {
  std::vector<long> values;
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Dense GF(2) elimination of the boundary matrices. Throws EmptyComplex,
/// UnsupportedDimension (max_k > 2 or < 0).
BettiVector betti_gf2(const SimplicialComplex& complex, int max_k);

}  // namespace shd
