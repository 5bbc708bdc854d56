#include <catch_amalgamated.hpp>

#include <cmath>

#include "shd/error.hpp"
#include "shd/rips.hpp"
#include "support/generators.hpp"

using namespace shd;

namespace {

const PointCloud kTriangle({{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.8}});

// Independent Rips membership test: every pair within scale.
bool is_clique(const PointCloud& cloud, const Simplex& s, double scale) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (euclidean_distance(cloud.point(s[i]), cloud.point(s[j])) > scale) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("rips of the small triangle cloud", "[rips]") {
  // Hand computation: |(0.5,0.8)| = sqrt(0.25 + 0.64) = sqrt(0.89).
  const double side = std::sqrt(0.89);
  REQUIRE(side == Catch::Approx(0.9434).epsilon(1e-4));
  REQUIRE(euclidean_distance(kTriangle.point(0), kTriangle.point(2)) == Catch::Approx(side).epsilon(1e-15));

  SECTION("scale 0.95 keeps the two short edges") {
    const auto k = build_rips(kTriangle, {0.95, 2});
    CHECK(k.vertex_count() == 3);
    auto edges = k.complex().simplices(1);
    CHECK(std::vector<Simplex>(edges.begin(), edges.end()) == std::vector<Simplex>{{0, 2}, {1, 2}});
    CHECK(k.complex().simplices(2).empty());
  }
  SECTION("scale 1.0 is the full triangle (closed convention)") {
    const auto k = build_rips(kTriangle, {1.0, 2});
    CHECK(k.complex().simplices(1).size() == 3);
    CHECK(k.complex().contains(Simplex{0, 1, 2}));
  }
  SECTION("scale 0 is vertices only") {
    const auto k = build_rips(kTriangle, {0.0, 2});
    CHECK(k.dimension() == 0);
    CHECK(k.vertex_count() == 3);
  }
  SECTION("max_dim caps the skeleton") {
    const auto k = build_rips(kTriangle, {1.0, 1});
    CHECK(k.dimension() == 1);
  }
}

TEST_CASE("rips rejects bad parameters", "[rips]") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::IoError;
  };
  CHECK(code([] { build_rips(kTriangle, {-1.0, 2}); }) == ErrorCode::InvalidArgument);
  CHECK(code([] { build_rips(kTriangle, {std::nan(""), 2}); }) == ErrorCode::InvalidArgument);
  CHECK(code([] { build_rips(kTriangle, {1.0, -1}); }) == ErrorCode::InvalidArgument);
  CHECK(code([] { build_rips(PointCloud(1, std::vector<double>{0.0, 0.0}), {1.0, 1}); }) == ErrorCode::NonInjective);
  CHECK(code([] { Filtration(PointCloud(1, std::vector<double>{0.0, 0.0}), 1); }) == ErrorCode::NonInjective);
}

TEST_CASE("rips matches the clique definition", "[rips][property]") {
  testing::Rng rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = testing::uniform_int(rng, 1, 9);
    const std::size_t d = testing::uniform_int(rng, 1, 3);
    const int max_dim = static_cast<int>(testing::uniform_int(rng, 0, 3));
    const double scale = testing::uniform_real(rng, 0.0, 1.5);
    const auto cloud = testing::random_cloud(rng, n, d);
    const auto k = rips_complex(cloud, {scale, max_dim});

    // Brute force: every subset of size <= max_dim + 1 that is a clique.
    std::size_t expected = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<VertexId> vs;
      for (VertexId v = 0; v < n; ++v) {
        if (mask & (1u << v)) vs.push_back(v);
      }
      if (vs.size() > static_cast<std::size_t>(max_dim) + 1) continue;
      const Simplex s(vs);
      if (is_clique(cloud, s, scale)) {
        ++expected;
        CHECK(k.contains(s));
      }
    }
    CHECK(k.size() == expected);
  }
}

TEST_CASE("rips is monotone in the scale", "[rips][property]") {
  testing::Rng rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto cloud = testing::random_cloud(rng, testing::uniform_int(rng, 2, 8), 2);
    double r1 = testing::uniform_real(rng, 0.0, 1.5);
    double r2 = testing::uniform_real(rng, 0.0, 1.5);
    if (r1 > r2) std::swap(r1, r2);
    const auto small = rips_complex(cloud, {r1, 2});
    const auto big = rips_complex(cloud, {r2, 2});
    for (int k = 0; k <= small.dimension(); ++k) {
      for (const Simplex& s : small.simplices(k)) CHECK(big.contains(s));
    }
  }
}

TEST_CASE("critical values", "[rips]") {
  const auto cv = critical_values(kTriangle, 2);
  REQUIRE(cv.size() == 2);
  CHECK(cv[0] == Catch::Approx(std::sqrt(0.89)).epsilon(1e-15));
  CHECK(cv[0] == euclidean_distance(kTriangle.point(1), kTriangle.point(2)));
  CHECK(cv[1] == 1.0);
  CHECK(critical_values(PointCloud({{1.0, 2.0}}), 2).empty());
  CHECK(critical_values(PointCloud({{0.0, 0.0}, {3.0, 4.0}}), 2) == std::vector<double>{5.0});
}

TEST_CASE("rips is constant between critical values", "[rips][property]") {
  testing::Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto cloud = testing::random_cloud(rng, testing::uniform_int(rng, 2, 7), 2);
    const auto cv = critical_values(cloud, 2);
    REQUIRE(std::is_sorted(cv.begin(), cv.end()));
    REQUIRE(std::adjacent_find(cv.begin(), cv.end()) == cv.end());
    for (std::size_t i = 0; i + 1 < cv.size(); ++i) {
      const auto lo = rips_complex(cloud, {cv[i], 2});
      const double t = testing::uniform_real(rng);
      const double mid = cv[i] + t * (cv[i + 1] - cv[i]);
      if (mid < cv[i + 1]) CHECK(rips_complex(cloud, {mid, 2}) == lo);
      CHECK_FALSE(rips_complex(cloud, {cv[i + 1], 2}) == lo);
    }
    // Below the first critical value only vertices.
    CHECK(rips_complex(cloud, {std::nextafter(cv.front(), 0.0), 2}).dimension() == 0);
  }
}

TEST_CASE("quotient of coincident points", "[rips]") {
  SECTION("one duplicated point") {
    const auto q = quotient_coincident(PointCloud({{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}));
    CHECK(q.cloud == PointCloud({{0.0, 0.0}, {1.0, 0.0}}));
    CHECK(q.multiplicity == std::vector<std::size_t>{2, 1});
    CHECK(q.class_map == std::vector<std::size_t>{0, 0, 1});
    CHECK(q.representative == std::vector<std::size_t>{0, 2});
  }
  SECTION("all distinct is the identity") {
    const auto q = quotient_coincident(kTriangle);
    CHECK(q.cloud == kTriangle);
    CHECK(q.multiplicity == std::vector<std::size_t>{1, 1, 1});
  }
  SECTION("one class") {
    const auto q = quotient_coincident(PointCloud({{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}}));
    CHECK(q.cloud.size() == 1);
    CHECK(q.multiplicity == std::vector<std::size_t>{3});
  }
}

TEST_CASE("quotient invariants", "[rips][property]") {
  testing::Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto cloud = testing::cloud_with_duplicates(rng, testing::uniform_int(rng, 1, 6), 2,
                                                      testing::uniform_int(rng, 0, 3));
    const auto q = quotient_coincident(cloud);
    CHECK_FALSE(q.cloud.has_coincident_points());
    std::size_t total = 0;
    for (std::size_t m : q.multiplicity) total += m;
    CHECK(total == cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
      const auto p = cloud.point(i);
      const auto r = q.cloud.point(q.class_map[i]);
      CHECK(std::equal(p.begin(), p.end(), r.begin(), r.end()));
    }
    for (std::size_t c = 0; c < q.cloud.size(); ++c) CHECK(q.class_map[q.representative[c]] == c);
  }
}

TEST_CASE("filtration levels", "[rips]") {
  const Filtration f(kTriangle, 2);
  CHECK(f.critical_values() == critical_values(kTriangle, 2));
  CHECK(f.level(0.0).dimension() == 0);
  CHECK(f.level(0.95).complex().simplices(1).size() == 2);
  CHECK(f.level(1.0).dimension() == 2);
}

TEST_CASE("pairwise distances: parallel and serial agree", "[rips]") {
  testing::Rng rng(25);
  for (std::size_t n : {1, 2, 17, 100}) {
    const auto cloud = testing::random_cloud(rng, n, 3);
    const auto par = pairwise_distances(cloud);
    CHECK(par == pairwise_distances_serial(cloud));
    CHECK(par.size() == n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        CHECK(par[condensed_index(n, i, j)] == euclidean_distance(cloud.point(i), cloud.point(j)));
      }
    }
  }
}
