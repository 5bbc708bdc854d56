#include <catch_amalgamated.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "shd/error.hpp"
#include "shd/io.hpp"
#include "shd/rips.hpp"

using namespace shd;
using namespace shd::cli;
using nlohmann::json;

namespace {

const std::filesystem::path kData = SHD_TEST_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json doc() const { return json::parse(out); }
};

Outcome invoke(RunConfig config) {
  std::ostringstream out, err;
  const int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

RunConfig with(Command cmd, std::vector<std::filesystem::path> inputs) {
  RunConfig c;
  c.command = cmd;
  c.inputs = std::move(inputs);
  return c;
}

}  // namespace

TEST_CASE("dist command", "[cli]") {
  SECTION("identical files") {
    const auto r = invoke(with(Command::Dist, {kData / "edge.json", kData / "edge.json"}));
    REQUIRE(r.code == 0);
    CHECK(r.doc()["distance"] == 0.0);
  }
  SECTION("edge against a vertex") {
    const auto r = invoke(with(Command::Dist, {kData / "edge.json", kData / "vertex.json"}));
    REQUIRE(r.code == 0);
    CHECK(r.doc()["distance"] == "inf");
    CHECK(r.doc()["directed_ab"] == "inf");
    CHECK(r.doc()["directed_ba"] == 0.0);
    CHECK(r.doc()["witness"]["ab"].is_null());
  }
  SECTION("order of the inputs") {
    const auto ab = invoke(with(Command::Dist, {kData / "edge.json", kData / "edge_shifted.json"})).doc();
    const auto ba = invoke(with(Command::Dist, {kData / "edge_shifted.json", kData / "edge.json"})).doc();
    CHECK(ab["distance"] == 1.0);
    CHECK(ab["distance"] == ba["distance"]);
    CHECK(ab["directed_ab"] == ba["directed_ba"]);
    CHECK(ab["witness"]["ab"]["sigma"] == json::array({0}));
  }
  SECTION("point clouds need a scale") {
    auto c = with(Command::Dist, {kData / "triangle.csv", kData / "triangle.csv"});
    CHECK(invoke(c).code == 2);
    c.scale = 1.0;
    CHECK(invoke(c).doc()["distance"] == 0.0);
  }
  SECTION("missing file is an input error") {
    const auto r = invoke(with(Command::Dist, {kData / "edge.json", kData / "missing.json"}));
    CHECK(r.code == 2);
    CHECK_THAT(r.err, Catch::Matchers::ContainsSubstring("IoError"));
  }
  SECTION("plain format") {
    auto c = with(Command::Dist, {kData / "edge.json", kData / "vertex.json"});
    c.format = Format::Plain;
    const auto r = invoke(c);
    CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("distance inf"));
  }
}

TEST_CASE("rips command round trip", "[cli]") {
  auto c = with(Command::Rips, {kData / "triangle.csv"});
  c.scale = 0.95;
  const auto r = invoke(c);
  REQUIRE(r.code == 0);
  const auto doc = parse_complex_document(r.doc());
  const auto direct = build_rips(load_point_cloud(kData / "triangle.csv", false), {0.95, 2});
  CHECK(doc.complex == direct.complex());

  c.inputs = {kData / "duplicates.csv"};
  c.header = true;
  CHECK(invoke(c).code == 2);  // coincident points
  c.quotient = true;
  CHECK(parse_complex_document(invoke(c).doc()).complex.vertex_count() == 2);
}

TEST_CASE("filtdist and hausdorff commands", "[cli]") {
  auto f = with(Command::FiltDist, {kData / "triangle.csv", kData / "triangle.csv"});
  const auto fr = invoke(f);
  REQUIRE(fr.code == 0);
  CHECK(fr.doc()["distance"] == 0.0);
  CHECK(fr.doc()["alphas"].front() == 0.0);

  auto h = with(Command::Hausdorff, {kData / "edge.json", kData / "vertex.json"});
  CHECK(invoke(h).doc()["distance"] == 1.0);
  h.directed = true;
  CHECK(invoke(h).doc()["directed"] == 1.0);
  h.inputs = {kData / "vertex.json", kData / "edge.json"};
  CHECK(invoke(h).doc()["directed"] == 0.0);
}

TEST_CASE("collapse command", "[cli]") {
  auto c = with(Command::Collapse, {kData / "duplicates.csv"});
  c.header = true;
  c.scale = 1.5;
  const auto r = invoke(c);
  REQUIRE(r.code == 0);
  const auto doc = r.doc();
  CHECK(doc["trace"] == json::parse(R"([{"removed": 1, "apex": 0}])"));
  CHECK(doc["multiplicity"] == json::array({2, 1}));
  CHECK(doc["duplicates_dominated"] == true);
  CHECK(doc["isomorphic_to_quotient_rips"] == true);
  CHECK(doc["betti_original"] == doc["betti_quotient"]);

  c.core = true;
  CHECK(invoke(c).doc()["trace"].size() == 2);
}

TEST_CASE("output file", "[cli]") {
  const auto path = std::filesystem::temp_directory_path() / "shd_cli_test_out.json";
  auto c = with(Command::Dist, {kData / "edge.json", kData / "edge.json"});
  c.output = path;
  const auto r = invoke(c);
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(json::parse(in)["distance"] == 0.0);
  std::filesystem::remove(path);
}

TEST_CASE("bench helpers", "[cli]") {
  BenchConfig b;
  parse_sizes("5:20:5", b);
  CHECK(b.first == 5);
  CHECK(b.last == 20);
  CHECK(b.step == 5);
  parse_sizes("3:4", b);
  CHECK(b.step == 1);
  CHECK_THROWS_AS(parse_sizes("4:3", b), Error);
  CHECK_THROWS_AS(parse_sizes("a:3", b), Error);
  CHECK_THROWS_AS(parse_sizes("3", b), Error);

  // Exact power law t = p^3 has slope 3.
  std::vector<BenchRow> rows;
  for (std::size_t p : {2, 4, 8, 16}) rows.push_back({p, 0, 0, std::pow(static_cast<double>(p), 3.0)});
  CHECK(loglog_slope(rows) == Catch::Approx(3.0));

  BenchConfig small;
  small.first = 4;
  small.last = 6;
  small.step = 2;
  small.min_seconds = 0.0;
  const auto report = run_bench(small, 2);
  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].points == 4);
  CHECK(report.rows[1].points == 6);
  CHECK(report.scale == Catch::Approx(std::sqrt(2.0)));
  // Complete complexes on 6 points, capped at dimension 2: 6 + 15 + 20 simplices.
  CHECK(report.rows[1].simplices_a == 41);
}
