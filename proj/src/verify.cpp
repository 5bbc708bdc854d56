#include "shd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "shd/error.hpp"

namespace shd {

bool eps_close_predicate(const LabeledComplex& a, const LabeledComplex& b, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::NonPositiveEps, "eps must be positive");
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::AmbientDimMismatch,
                std::to_string(a.ambient_dim()) + " vs " + std::to_string(b.ambient_dim()));
  }
  for (int k = 0; k <= a.dimension(); ++k) {
    for (const Simplex& sigma : a.complex().simplices(k)) {
      bool some_tau = false;
      for (const Simplex& tau : b.complex().simplices(k)) {
        bool every_v = true;
        for (VertexId v : sigma.vertices()) {
          bool some_w = false;
          for (VertexId w : tau.vertices()) {
            if (euclidean_distance(a.coord(v), b.coord(w)) < eps) {
              some_w = true;
              break;
            }
          }
          if (!some_w) {
            every_v = false;
            break;
          }
        }
        if (every_v) {
          some_tau = true;
          break;
        }
      }
      if (!some_tau) return false;
    }
  }
  return true;
}

ExtendedDistance directed_by_sweep(const LabeledComplex& a, const LabeledComplex& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::AmbientDimMismatch,
                std::to_string(a.ambient_dim()) + " vs " + std::to_string(b.ambient_dim()));
  }
  std::vector<double> candidates;
  for (std::size_t i = 0; i < a.vertex_count(); ++i) {
    for (std::size_t j = 0; j < b.vertex_count(); ++j) {
      candidates.push_back(euclidean_distance(a.coord_at(i), b.coord_at(j)));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // The predicate holds exactly on (value, inf). Testing at the next double
  // above c asks whether value <= c.
  constexpr double inf = std::numeric_limits<double>::infinity();
  for (double c : candidates) {
    if (eps_close_predicate(a, b, std::nextafter(c, inf))) return ExtendedDistance(c);
  }
  return ExtendedDistance::infinity();
}

namespace {

// Rank over GF(2) of a matrix given as bit-packed rows.
long gf2_rank(std::vector<std::vector<std::uint64_t>> rows) {
  long rank = 0;
  if (rows.empty()) return 0;
  const std::size_t words = rows.front().size();
  std::size_t next = 0;
  for (std::size_t col = 0; col < words * 64 && next < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = next;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && (rows[r][w] & bit)) {
        for (std::size_t x = 0; x < words; ++x) rows[r][x] ^= rows[next][x];
      }
    }
    ++next;
    ++rank;
  }
  return rank;
}

// Rank of the boundary map from k-simplices to (k-1)-simplices.
long boundary_rank(const SimplicialComplex& complex, int k) {
  if (k < 1 || k > complex.dimension()) return 0;
  auto lower = complex.simplices(k - 1);
  auto upper = complex.simplices(k);
  const std::size_t words = (lower.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(upper.size());
  for (const Simplex& s : upper) {
    std::vector<std::uint64_t> row(words, 0);
    for (const Simplex& f : s.facets()) {
      const auto idx = static_cast<std::size_t>(std::lower_bound(lower.begin(), lower.end(), f) - lower.begin());
      row[idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
    rows.push_back(std::move(row));
  }
  return gf2_rank(std::move(rows));
}

}  // namespace

BettiVector betti_gf2(const SimplicialComplex& complex, int max_k) {
  if (max_k < 0 || max_k > 2) {
    throw Error(ErrorCode::UnsupportedDimension, "Betti numbers supported for k <= 2, asked for " + std::to_string(max_k));
  }
  if (complex.empty()) throw Error(ErrorCode::EmptyComplex, "Betti numbers of the empty complex");
  BettiVector out;
  long rank_below = 0;  // rank of the boundary out of C_k
  for (int k = 0; k <= max_k; ++k) {
    const auto chains = static_cast<long>(complex.simplices(k).size());
    const long rank_above = boundary_rank(complex, k + 1);
    out.values.push_back(chains - rank_below - rank_above);
    rank_below = rank_above;
  }
  return out;
}

}  // namespace shd
