#include "shd/collapse.hpp"

#include <algorithm>

#include "shd/error.hpp"

namespace shd {

namespace {

void require_vertex(const SimplicialComplex& complex, VertexId v) {
  if (!complex.has_vertex(v)) throw Error(ErrorCode::VertexNotFound, "vertex " + std::to_string(v));
}

bool is_apex(const SimplicialComplex& complex, VertexId w) {
  for (int k = 0; k <= complex.dimension(); ++k) {
    for (const Simplex& s : complex.simplices(k)) {
      if (!s.contains(w) && !complex.contains(s.with_vertex(w))) return false;
    }
  }
  return true;
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& complex, VertexId v) {
  require_vertex(complex, v);
  std::vector<std::vector<Simplex>> faces(static_cast<std::size_t>(std::max(complex.dimension(), 0)));
  for (int k = 1; k <= complex.dimension(); ++k) {
    for (const Simplex& s : complex.simplices(k)) {
      if (s.contains(v)) faces[static_cast<std::size_t>(k - 1)].push_back(s.without_vertex(v));
    }
  }
  return SimplicialComplex::from_faces(std::move(faces));
}

std::vector<VertexId> cone_apexes(const SimplicialComplex& complex) {
  std::vector<VertexId> out;
  for (VertexId w : complex.vertex_ids()) {
    if (is_apex(complex, w)) out.push_back(w);
  }
  return out;
}

bool is_dominated_by(const SimplicialComplex& complex, VertexId v, VertexId w) {
  const SimplicialComplex lk = link(complex, v);
  return lk.has_vertex(w) && is_apex(lk, w);
}

std::vector<Domination> dominated_vertices(const SimplicialComplex& complex) {
  std::vector<Domination> out;
  for (VertexId v : complex.vertex_ids()) {
    for (VertexId w : cone_apexes(link(complex, v))) out.push_back({v, w});
  }
  return out;
}

SimplicialComplex remove_vertex(const SimplicialComplex& complex, VertexId v) {
  require_vertex(complex, v);
  if (complex.vertex_count() < 2) throw Error(ErrorCode::LastVertex, "cannot remove the only vertex");
  std::vector<std::vector<Simplex>> faces(static_cast<std::size_t>(complex.dimension() + 1));
  for (int k = 0; k <= complex.dimension(); ++k) {
    for (const Simplex& s : complex.simplices(k)) {
      if (!s.contains(v)) faces[static_cast<std::size_t>(k)].push_back(s);
    }
  }
  return SimplicialComplex::from_faces(std::move(faces));
}

CollapseTrace strong_collapse_core(const SimplicialComplex& complex) {
  CollapseTrace trace{{}, complex};
  for (;;) {
    bool collapsed = false;
    for (VertexId v : trace.final.vertex_ids()) {
      const auto apexes = cone_apexes(link(trace.final, v));
      if (apexes.empty()) continue;
      trace.steps.push_back({v, apexes.front()});
      trace.final = remove_vertex(trace.final, v);
      collapsed = true;
      break;
    }
    if (!collapsed) return trace;
  }
}

QuotientEquivalenceReport verify_quotient_equivalence(const PointCloud& cloud, const RipsParams& params) {
  const SimplicialComplex original = rips_complex(cloud, params);
  QuotientEquivalenceReport report{quotient_coincident(cloud), {{}, original}, true, false, {}, {}};
  const QuotientResult& q = report.quotient;

  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const std::size_t rep = q.representative[q.class_map[i]];
    if (rep == i) continue;
    const auto v = static_cast<VertexId>(i);
    const auto w = static_cast<VertexId>(rep);
    if (!is_dominated_by(report.trace.final, v, w)) report.duplicates_dominated = false;
    report.trace.steps.push_back({v, w});
    report.trace.final = remove_vertex(report.trace.final, v);
  }

  // Surviving vertices are the class representatives, in increasing order.
  std::vector<double> flat;
  for (VertexId v : report.trace.final.vertex_ids()) {
    auto p = cloud.point(v);
    flat.insert(flat.end(), p.begin(), p.end());
  }
  const LabeledComplex collapsed(report.trace.final, cloud.ambient_dim(), std::move(flat));
  const LabeledComplex quotient_rips = build_rips(q.cloud, params);
  report.isomorphic = is_isomorphic(collapsed, quotient_rips);

  const int max_k = std::min(params.max_dim, 2);
  report.betti_original = betti_gf2(original, max_k);
  report.betti_quotient = betti_gf2(quotient_rips.complex(), max_k);
  return report;
}

}  // namespace shd
