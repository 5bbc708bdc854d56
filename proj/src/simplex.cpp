#include "shd/simplex.hpp"

#include <algorithm>

#include "shd/error.hpp"

namespace shd {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorCode::InvalidSimplex, "simplex has no vertices");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(ErrorCode::InvalidSimplex, "repeated vertex in " + to_string());
  }
}

Simplex::Simplex(std::initializer_list<VertexId> vertices) : Simplex(std::vector<VertexId>(vertices)) {}

Simplex Simplex::from_sorted(std::vector<VertexId> vertices) {
  Simplex s;
  s.vertices_ = std::move(vertices);
  return s;
}

bool Simplex::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Simplex Simplex::with_vertex(VertexId w) const {
  auto pos = std::lower_bound(vertices_.begin(), vertices_.end(), w);
  if (pos != vertices_.end() && *pos == w) return *this;
  std::vector<VertexId> out;
  out.reserve(vertices_.size() + 1);
  out.insert(out.end(), vertices_.begin(), pos);
  out.push_back(w);
  out.insert(out.end(), pos, vertices_.end());
  return from_sorted(std::move(out));
}

Simplex Simplex::without_vertex(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size());
  for (VertexId u : vertices_) {
    if (u != v) out.push_back(u);
  }
  return from_sorted(std::move(out));
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  // Dropping the last vertex first yields the facets in lexicographic order.
  for (std::size_t skip = vertices_.size(); skip-- > 0;) {
    std::vector<VertexId> f;
    f.reserve(vertices_.size() - 1);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i != skip) f.push_back(vertices_[i]);
    }
    out.push_back(from_sorted(std::move(f)));
  }
  return out;
}

std::string Simplex::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vertices_[i]);
  }
  return s + "}";
}

}  // namespace shd
