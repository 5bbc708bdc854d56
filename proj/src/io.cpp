#include "shd/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>
#include <string_view>

#include "shd/error.hpp"

namespace shd {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_cell(std::string_view cell, std::size_t line_no, std::size_t column) {
  cell = trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(value)) {
    throw Error(ErrorCode::NonNumericCell, "line " + std::to_string(line_no) + ", column " +
                                               std::to_string(column) + ": '" + std::string(cell) + "'");
  }
  return value;
}

}  // namespace

PointCloud parse_point_cloud(std::istream& in, bool header) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  std::vector<double> flat;
  while (std::getline(in, line)) {
    ++line_no;
    if (header && line_no == 1) continue;
    const std::string_view row = trim(line);
    if (row.empty()) continue;

    std::size_t columns = 0;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = row.find(',', start);
      const std::string_view cell = row.substr(start, comma == std::string_view::npos ? row.npos : comma - start);
      flat.push_back(parse_cell(cell, line_no, ++columns));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (width == 0) {
      width = columns;
    } else if (columns != width) {
      throw Error(ErrorCode::RaggedRows, "line " + std::to_string(line_no) + " has " + std::to_string(columns) +
                                             " columns, expected " + std::to_string(width));
    }
  }
  if (flat.empty()) throw Error(ErrorCode::EmptyFile, "no data rows");
  return PointCloud(width, std::move(flat));
}

PointCloud load_point_cloud(const std::filesystem::path& path, bool header) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return parse_point_cloud(in, header);
}

ComplexDocument parse_complex_document(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "document must be an object");
    const auto d = doc.at("ambient_dim").get<long long>();
    if (d <= 0) throw Error(ErrorCode::ParseError, "ambient_dim must be positive");
    ComplexDocument out{static_cast<std::size_t>(d), {}, {}};

    std::vector<Simplex> generators;
    for (const auto& v : doc.at("vertices")) {
      const auto id = v.at("id").get<long long>();
      if (id < 0 || id > static_cast<long long>(std::numeric_limits<VertexId>::max())) {
        throw Error(ErrorCode::ParseError, "vertex id out of range: " + std::to_string(id));
      }
      auto coords = v.at("coords").get<std::vector<double>>();
      if (coords.size() != out.ambient_dim) {
        throw Error(ErrorCode::ParseError, "vertex " + std::to_string(id) + " has " + std::to_string(coords.size()) +
                                               " coordinates, expected " + std::to_string(out.ambient_dim));
      }
      const auto vid = static_cast<VertexId>(id);
      if (!out.coords.emplace(vid, std::move(coords)).second) {
        throw Error(ErrorCode::ParseError, "duplicate vertex id " + std::to_string(id));
      }
      generators.push_back(Simplex{vid});
    }

    if (doc.contains("simplices")) {
      for (const auto& s : doc.at("simplices")) {
        std::vector<VertexId> ids;
        for (const auto& x : s) {
          const auto id = x.get<long long>();
          if (id < 0 || id > static_cast<long long>(std::numeric_limits<VertexId>::max()) ||
              !out.coords.contains(static_cast<VertexId>(id))) {
            throw Error(ErrorCode::UnknownVertexInSimplex, "simplex " + s.dump() + " references vertex " +
                                                               std::to_string(id));
          }
          ids.push_back(static_cast<VertexId>(id));
        }
        try {
          generators.emplace_back(std::move(ids));
        } catch (const Error&) {
          throw Error(ErrorCode::ParseError, "invalid simplex " + s.dump());
        }
      }
    }
    out.complex = closure(generators);
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

ComplexDocument load_complex_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return parse_complex_document(doc);
}

LabeledComplex load_complex(const std::filesystem::path& path) {
  ComplexDocument doc = load_complex_document(path);
  return LabeledComplex(std::move(doc.complex), doc.ambient_dim, doc.coords);
}

nlohmann::json complex_to_json(const SimplicialComplex& complex, std::size_t ambient_dim,
                               const std::map<VertexId, std::vector<double>>& coords) {
  nlohmann::json vertices = nlohmann::json::array();
  for (VertexId v : complex.vertex_ids()) vertices.push_back({{"id", v}, {"coords", coords.at(v)}});
  nlohmann::json simplices = nlohmann::json::array();
  for (const Simplex& s : complex.maximal_faces()) {
    simplices.push_back(std::vector<VertexId>(s.vertices().begin(), s.vertices().end()));
  }
  return {{"ambient_dim", ambient_dim}, {"vertices", std::move(vertices)}, {"simplices", std::move(simplices)}};
}

nlohmann::json complex_to_json(const LabeledComplex& complex) {
  std::map<VertexId, std::vector<double>> coords;
  for (VertexId v : complex.complex().vertex_ids()) {
    auto c = complex.coord(v);
    coords.emplace(v, std::vector<double>(c.begin(), c.end()));
  }
  return complex_to_json(complex.complex(), complex.ambient_dim(), coords);
}

nlohmann::json distance_to_json(ExtendedDistance d) {
  if (d.is_infinite()) return "inf";
  return d.value();
}

}  // namespace shd
