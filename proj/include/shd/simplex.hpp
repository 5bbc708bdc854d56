#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace shd {

using VertexId = std::uint32_t;

/// A nonempty, strictly increasing tuple of vertex ids.
class Simplex {
 public:
  /// Sorts the input. Throws InvalidSimplex when empty or when ids repeat.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices);

  /// Caller guarantees the input is nonempty and strictly increasing.
  static Simplex from_sorted(std::vector<VertexId> vertices);

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  std::span<const VertexId> vertices() const { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  VertexId front() const { return vertices_.front(); }

  bool contains(VertexId v) const;

  /// sigma with w inserted; returns *this when w is already present.
  Simplex with_vertex(VertexId w) const;
  /// sigma with v removed. Requires v in sigma and dimension() >= 1.
  Simplex without_vertex(VertexId v) const;
  /// The dimension()+1 codimension-one faces; empty for a vertex.
  std::vector<Simplex> facets() const;

  std::string to_string() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    return a.vertices_ <=> b.vertices_;
  }

 private:
  Simplex() = default;
  std::vector<VertexId> vertices_;
};

}  // namespace shd
