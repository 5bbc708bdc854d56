#include "shd/complex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "shd/error.hpp"

namespace shd {

namespace {

void sort_unique(std::vector<Simplex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::vector<Simplex>> faces_by_dim) {
  while (!faces_by_dim.empty() && faces_by_dim.back().empty()) faces_by_dim.pop_back();

  SimplicialComplex out;
  for (std::size_t k = 0; k < faces_by_dim.size(); ++k) {
    auto& faces = faces_by_dim[k];
    for (const Simplex& s : faces) {
      if (s.dimension() != static_cast<int>(k)) {
        throw Error(ErrorCode::InvalidSimplex,
                    s.to_string() + " listed among the " + std::to_string(k) + "-simplices");
      }
    }
    sort_unique(faces);
  }
  out.faces_ = std::move(faces_by_dim);

  for (std::size_t k = 1; k < out.faces_.size(); ++k) {
    if (out.faces_[k - 1].empty()) {
      throw Error(ErrorCode::NotDownwardClosed, "no " + std::to_string(k - 1) + "-simplices below dimension " +
                                                    std::to_string(k));
    }
    const auto& lower = out.faces_[k - 1];
    for (const Simplex& s : out.faces_[k]) {
      for (const Simplex& f : s.facets()) {
        if (!std::binary_search(lower.begin(), lower.end(), f)) {
          throw Error(ErrorCode::NotDownwardClosed, "facet " + f.to_string() + " of " + s.to_string() + " is missing");
        }
      }
    }
  }

  if (!out.faces_.empty()) {
    out.vertex_ids_.reserve(out.faces_[0].size());
    for (const Simplex& s : out.faces_[0]) out.vertex_ids_.push_back(s.front());
  }
  return out;
}

std::span<const Simplex> SimplicialComplex::simplices(int k) const {
  if (k < 0 || k >= static_cast<int>(faces_.size())) return {};
  return faces_[static_cast<std::size_t>(k)];
}

std::size_t SimplicialComplex::size() const {
  std::size_t n = 0;
  for (const auto& f : faces_) n += f.size();
  return n;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  auto faces = simplices(s.dimension());
  return std::binary_search(faces.begin(), faces.end(), s);
}

bool SimplicialComplex::has_vertex(VertexId v) const {
  return std::binary_search(vertex_ids_.begin(), vertex_ids_.end(), v);
}

std::vector<Simplex> SimplicialComplex::maximal_faces() const {
  std::vector<Simplex> out;
  for (std::size_t k = 0; k < faces_.size(); ++k) {
    const auto& faces = faces_[k];
    std::vector<bool> covered(faces.size(), false);
    if (k + 1 < faces_.size()) {
      for (const Simplex& s : faces_[k + 1]) {
        for (const Simplex& f : s.facets()) {
          auto it = std::lower_bound(faces.begin(), faces.end(), f);
          covered[static_cast<std::size_t>(it - faces.begin())] = true;
        }
      }
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (!covered[i]) out.push_back(faces[i]);
    }
  }
  return out;
}

SimplicialComplex closure(std::span<const Simplex> generators) {
  if (generators.empty()) throw Error(ErrorCode::EmptyComplex, "no generators");

  std::vector<std::vector<Simplex>> faces;
  for (const Simplex& g : generators) {
    const std::size_t n = g.size();
    if (n > 24) throw Error(ErrorCode::InvalidArgument, "generator of dimension " + std::to_string(n - 1) + " is too large");
    if (faces.size() < n) faces.resize(n);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<VertexId> sub;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) sub.push_back(g[i]);
      }
      const std::size_t k = sub.size() - 1;
      faces[k].push_back(Simplex::from_sorted(std::move(sub)));
    }
  }
  return SimplicialComplex::from_faces(std::move(faces));
}

std::span<const Simplex> k_simplices(const SimplicialComplex& complex, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative dimension");
  return complex.simplices(k);
}

double euclidean_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

LabeledComplex::LabeledComplex(SimplicialComplex complex, std::size_t ambient_dim,
                               const std::map<VertexId, std::vector<double>>& coords)
    : complex_(std::move(complex)), ambient_dim_(ambient_dim) {
  if (coords.size() != complex_.vertex_count()) {
    throw Error(ErrorCode::InvalidArgument, "coordinate map has " + std::to_string(coords.size()) +
                                                " entries for " + std::to_string(complex_.vertex_count()) +
                                                " vertices");
  }
  coords_.reserve(coords.size() * ambient_dim);
  for (VertexId v : complex_.vertex_ids()) {
    auto it = coords.find(v);
    if (it == coords.end()) {
      throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " has no coordinates");
    }
    if (it->second.size() != ambient_dim) {
      throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " has " +
                                                  std::to_string(it->second.size()) + " coordinates, expected " +
                                                  std::to_string(ambient_dim));
    }
    coords_.insert(coords_.end(), it->second.begin(), it->second.end());
  }
  validate();
}

LabeledComplex::LabeledComplex(SimplicialComplex complex, std::size_t ambient_dim, std::vector<double> flat_coords)
    : complex_(std::move(complex)), ambient_dim_(ambient_dim), coords_(std::move(flat_coords)) {
  if (ambient_dim_ == 0 || coords_.size() != complex_.vertex_count() * ambient_dim_) {
    throw Error(ErrorCode::InvalidArgument, "coordinate array does not match vertex count and ambient dimension");
  }
  validate();
}

void LabeledComplex::validate() const {
  if (complex_.empty()) throw Error(ErrorCode::EmptyComplex, "labeled complex has no vertices");
  if (ambient_dim_ == 0) throw Error(ErrorCode::InvalidArgument, "ambient dimension must be positive");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "non-finite coordinate");
  }
  std::vector<std::size_t> order(vertex_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto less = [&](std::size_t i, std::size_t j) {
    auto a = coord_at(i), b = coord_at(j);
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  };
  std::sort(order.begin(), order.end(), less);
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!less(order[i - 1], order[i])) {
      throw Error(ErrorCode::NonInjective, "vertices " + std::to_string(complex_.vertex_ids()[order[i - 1]]) +
                                               " and " + std::to_string(complex_.vertex_ids()[order[i]]) +
                                               " share coordinates");
    }
  }
}

std::size_t LabeledComplex::vertex_index(VertexId v) const {
  auto ids = complex_.vertex_ids();
  auto it = std::lower_bound(ids.begin(), ids.end(), v);
  if (it == ids.end() || *it != v) throw Error(ErrorCode::VertexNotFound, "vertex " + std::to_string(v));
  return static_cast<std::size_t>(it - ids.begin());
}

bool is_isomorphic(const LabeledComplex& a, const LabeledComplex& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(ErrorCode::AmbientDimMismatch,
                std::to_string(a.ambient_dim()) + " vs " + std::to_string(b.ambient_dim()));
  }
  if (a.vertex_count() != b.vertex_count() || a.dimension() != b.dimension()) return false;

  // Injectivity makes the coordinate-matching map the only candidate.
  std::map<std::vector<double>, VertexId> by_coord;
  for (std::size_t i = 0; i < b.vertex_count(); ++i) {
    auto c = b.coord_at(i);
    by_coord.emplace(std::vector<double>(c.begin(), c.end()), b.complex().vertex_ids()[i]);
  }
  std::map<VertexId, VertexId> phi;
  for (std::size_t i = 0; i < a.vertex_count(); ++i) {
    auto c = a.coord_at(i);
    auto it = by_coord.find(std::vector<double>(c.begin(), c.end()));
    if (it == by_coord.end()) return false;
    phi.emplace(a.complex().vertex_ids()[i], it->second);
  }

  for (int k = 0; k <= a.dimension(); ++k) {
    auto sa = a.complex().simplices(k);
    auto sb = b.complex().simplices(k);
    if (sa.size() != sb.size()) return false;
    std::vector<Simplex> mapped;
    mapped.reserve(sa.size());
    for (const Simplex& s : sa) {
      std::vector<VertexId> img;
      img.reserve(s.size());
      for (VertexId v : s.vertices()) img.push_back(phi.at(v));
      mapped.emplace_back(std::move(img));
    }
    std::sort(mapped.begin(), mapped.end());
    if (!std::equal(mapped.begin(), mapped.end(), sb.begin(), sb.end())) return false;
  }
  return true;
}

}  // namespace shd
