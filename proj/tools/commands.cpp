#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "shd/collapse.hpp"
#include "shd/distance.hpp"
#include "shd/error.hpp"
#include "shd/io.hpp"
#include "shd/rips.hpp"
#include "shd/verify.hpp"

namespace shd::cli {

using nlohmann::json;

namespace {

bool is_json_path(const std::filesystem::path& p) { return p.extension() == ".json"; }

void require_inputs(const RunConfig& config, std::size_t n, const char* command) {
  if (config.inputs.size() != n) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(command) + " expects " + std::to_string(n) + " input path(s)");
  }
}

double require_scale(const RunConfig& config) {
  if (!config.scale) throw Error(ErrorCode::InvalidArgument, "--scale is required for point-cloud input");
  return *config.scale;
}

PointCloud load_cloud(const RunConfig& config, const std::filesystem::path& path) {
  PointCloud cloud = load_point_cloud(path, config.header);
  if (config.quotient) return quotient_coincident(cloud).cloud;
  return cloud;
}

// A complex document, or the Rips complex of a CSV cloud at --scale.
LabeledComplex load_labeled(const RunConfig& config, const std::filesystem::path& path) {
  if (is_json_path(path)) return load_complex(path);
  return build_rips(load_cloud(config, path), RipsParams{require_scale(config), config.max_dim});
}

// Vertex images of a complex document, or the points of a CSV cloud.
PointCloud load_points(const RunConfig& config, const std::filesystem::path& path) {
  if (!is_json_path(path)) return load_cloud(config, path);
  const ComplexDocument doc = load_complex_document(path);
  std::vector<double> flat;
  for (const auto& [id, c] : doc.coords) flat.insert(flat.end(), c.begin(), c.end());
  return PointCloud(doc.ambient_dim, std::move(flat));
}

json witness_to_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  auto ids = [](const Simplex& s) { return std::vector<VertexId>(s.vertices().begin(), s.vertices().end()); };
  return {{"dimension", w->dimension}, {"sigma", ids(w->sigma)}, {"tau", ids(w->tau)}, {"v", w->v}, {"w", w->w}};
}

json trace_to_json(const std::vector<Domination>& steps) {
  json out = json::array();
  for (const auto& s : steps) out.push_back({{"removed", s.vertex}, {"apex", s.apex}});
  return out;
}

std::string plain_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return ExtendedDistance(v.get<double>()).to_string();
  return v.dump();
}

// Plain format: one "key value" line per scalar field.
void emit(const json& doc, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << key << '\n';
      for (const auto& row : value) {
        std::string line;
        for (const auto& [k, v] : row.items()) line += (line.empty() ? "  " : " ") + k + "=" + plain_value(v);
        out << line << '\n';
      }
    } else {
      out << key << ' ' << plain_value(value) << '\n';
    }
  }
}

json cmd_rips(const RunConfig& config) {
  require_inputs(config, 1, "rips");
  const LabeledComplex complex = build_rips(load_cloud(config, config.inputs[0]), {require_scale(config), config.max_dim});
  return complex_to_json(complex);
}

json cmd_dist(const RunConfig& config) {
  require_inputs(config, 2, "dist");
  const LabeledComplex a = load_labeled(config, config.inputs[0]);
  const LabeledComplex b = load_labeled(config, config.inputs[1]);
  const HausdorffResult r = simplicial_hausdorff_detail(a, b);
  return {{"distance", distance_to_json(r.distance)},
          {"directed_ab", distance_to_json(r.ab.value)},
          {"directed_ba", distance_to_json(r.ba.value)},
          {"witness", {{"ab", witness_to_json(r.ab.witness)}, {"ba", witness_to_json(r.ba.witness)}}}};
}

json cmd_filtdist(const RunConfig& config) {
  require_inputs(config, 2, "filtdist");
  const Filtration a(load_cloud(config, config.inputs[0]), config.max_dim);
  const Filtration b(load_cloud(config, config.inputs[1]), config.max_dim);
  const FilteredResult r = filtered_hausdorff_detail(a, b);
  return {{"distance", distance_to_json(r.distance)},
          {"directed_ab", distance_to_json(r.directed_ab)},
          {"directed_ba", distance_to_json(r.directed_ba)},
          {"alphas", r.levels}};
}

json cmd_hausdorff(const RunConfig& config) {
  require_inputs(config, 2, "hausdorff");
  const PointCloud p = load_points(config, config.inputs[0]);
  const PointCloud q = load_points(config, config.inputs[1]);
  if (config.directed) return {{"directed", classical_directed_hausdorff(p, q)}};
  return {{"distance", classical_hausdorff(p, q)}};
}

json betti_to_json(const BettiVector& b) { return b.values; }

json cmd_collapse(const RunConfig& config) {
  require_inputs(config, 1, "collapse");
  const auto& path = config.inputs[0];

  if (!is_json_path(path)) {
    const PointCloud cloud = load_point_cloud(path, config.header);
    const QuotientEquivalenceReport report =
        verify_quotient_equivalence(cloud, RipsParams{require_scale(config), config.max_dim});
    std::map<VertexId, std::vector<double>> coords;
    for (VertexId v : report.trace.final.vertex_ids()) {
      auto c = cloud.point(v);
      coords.emplace(v, std::vector<double>(c.begin(), c.end()));
    }
    CollapseTrace trace = report.trace;
    if (config.core) {
      CollapseTrace rest = strong_collapse_core(trace.final);
      trace.steps.insert(trace.steps.end(), rest.steps.begin(), rest.steps.end());
      trace.final = std::move(rest.final);
    }
    return {{"complex", complex_to_json(trace.final, cloud.ambient_dim(), coords)},
            {"trace", trace_to_json(trace.steps)},
            {"multiplicity", report.quotient.multiplicity},
            {"duplicates_dominated", report.duplicates_dominated},
            {"isomorphic_to_quotient_rips", report.isomorphic},
            {"betti_original", betti_to_json(report.betti_original)},
            {"betti_quotient", betti_to_json(report.betti_quotient)}};
  }

  // Complex document: coordinates may repeat. Collapse each repeat onto the
  // first vertex (by id) with the same coordinates when it is dominated there.
  const ComplexDocument doc = load_complex_document(path);
  std::map<std::vector<double>, VertexId> first;
  std::vector<Domination> steps;
  std::vector<Domination> undominated;
  SimplicialComplex current = doc.complex;
  for (const auto& [v, c] : doc.coords) {
    auto [it, inserted] = first.emplace(c, v);
    if (inserted) continue;
    if (is_dominated_by(current, v, it->second)) {
      steps.push_back({v, it->second});
      current = remove_vertex(current, v);
    } else {
      undominated.push_back({v, it->second});
    }
  }
  if (config.core) {
    CollapseTrace rest = strong_collapse_core(current);
    steps.insert(steps.end(), rest.steps.begin(), rest.steps.end());
    current = std::move(rest.final);
  }
  const int max_k = std::clamp(current.dimension(), 0, 2);
  json undominated_json = json::array();
  for (const auto& s : undominated) undominated_json.push_back({{"vertex", s.vertex}, {"coincides_with", s.apex}});
  return {{"complex", complex_to_json(current, doc.ambient_dim, doc.coords)},
          {"trace", trace_to_json(steps)},
          {"undominated", std::move(undominated_json)},
          {"betti_original", betti_to_json(betti_gf2(doc.complex, std::clamp(doc.complex.dimension(), 0, 2)))},
          {"betti_collapsed", betti_to_json(betti_gf2(current, max_k))}};
}

json cmd_bench(const RunConfig& config) {
  const BenchReport report = run_bench(config.bench, config.max_dim);
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"p", r.points}, {"seconds", r.seconds}, {"simplices_a", r.simplices_a}, {"simplices_b", r.simplices_b}});
  }
  return {{"max_dim", config.max_dim},
          {"ambient_dim", config.bench.ambient_dim},
          {"scale", report.scale},
          {"seed", config.bench.seed},
          {"rows", std::move(rows)},
          {"slope", report.slope}};
}

json dispatch(const RunConfig& config) {
  if (config.max_dim < 0) throw Error(ErrorCode::InvalidArgument, "--max-dim must be nonnegative");
  switch (config.command) {
    case Command::Rips: return cmd_rips(config);
    case Command::Dist: return cmd_dist(config);
    case Command::FiltDist: return cmd_filtdist(config);
    case Command::Hausdorff: return cmd_hausdorff(config);
    case Command::Collapse: return cmd_collapse(config);
    case Command::Bench: return cmd_bench(config);
  }
  throw std::logic_error("unknown command");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const json doc = dispatch(config);
    if (config.output) {
      std::ofstream file(*config.output);
      if (!file) throw Error(ErrorCode::IoError, "cannot write " + config.output->string());
      emit(doc, config.format, file);
    } else {
      emit(doc, config.format, out);
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

void parse_sizes(const std::string& text, BenchConfig& config) {
  std::vector<std::size_t> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      parts.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad --sizes component '" + item + "'");
    }
  }
  if (parts.size() < 2 || parts.size() > 3 || parts[0] > parts[1]) {
    throw Error(ErrorCode::InvalidArgument, "--sizes expects first:last[:step] with first <= last");
  }
  config.first = parts[0];
  config.last = parts[1];
  config.step = parts.size() == 3 ? parts[2] : 1;
}

}  // namespace shd::cli
