#include <catch_amalgamated.hpp>

#include <cmath>

#include "shd/distance.hpp"
#include "shd/error.hpp"
#include "shd/verify.hpp"
#include "support/generators.hpp"

using namespace shd;

namespace {

LabeledComplex labeled(std::vector<Simplex> gens, std::map<VertexId, std::vector<double>> coords) {
  const std::size_t d = coords.begin()->second.size();
  return LabeledComplex(closure(gens), d, coords);
}

LabeledComplex edge_a() { return labeled({Simplex{0, 1}}, {{0, {0, 0}}, {1, {1, 0}}}); }
LabeledComplex edge_b() { return labeled({Simplex{0, 1}}, {{0, {0, 1}}, {1, {1, 1}}}); }
LabeledComplex vertex() { return labeled({Simplex{0}}, {{0, {0, 0}}}); }

}  // namespace

TEST_CASE("eps-closeness predicate", "[verify]") {
  CHECK(eps_close_predicate(edge_a(), edge_a(), 1e-12));
  CHECK(eps_close_predicate(edge_a(), edge_a(), 5.0));
  CHECK_FALSE(eps_close_predicate(edge_a(), edge_b(), 1.0));
  CHECK(eps_close_predicate(edge_a(), edge_b(), 1.0 + 1e-9));
  CHECK_FALSE(eps_close_predicate(edge_a(), vertex(), 1e6));
  CHECK_THROWS_AS(eps_close_predicate(edge_a(), edge_b(), 0.0), Error);
  CHECK_THROWS_AS(eps_close_predicate(edge_a(), edge_b(), -1.0), Error);
}

TEST_CASE("sweep oracle examples", "[verify]") {
  CHECK(directed_by_sweep(edge_a(), edge_a()) == ExtendedDistance(0.0));
  CHECK(directed_by_sweep(edge_a(), edge_b()) == ExtendedDistance(1.0));
  CHECK(directed_by_sweep(edge_a(), edge_b()) == directed_distance(edge_a(), edge_b()).value);
  CHECK(directed_by_sweep(edge_a(), vertex()).is_infinite());
}

TEST_CASE("sweep oracle agrees with the closed form", "[verify][property]") {
  testing::Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = testing::uniform_int(rng, 1, 3);
    const int max_dim = static_cast<int>(testing::uniform_int(rng, 0, 2));
    const auto a = testing::random_labeled(rng, testing::uniform_int(rng, 1, 8), d, max_dim);
    const auto b = testing::random_labeled(rng, testing::uniform_int(rng, 1, 8), d, max_dim);
    CHECK(directed_distance(a, b).value == directed_by_sweep(a, b));
  }
}

TEST_CASE("predicate is monotone in eps", "[verify][property]") {
  testing::Rng rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::random_labeled(rng, testing::uniform_int(rng, 1, 6), 2, 2);
    const auto b = testing::random_labeled(rng, testing::uniform_int(rng, 1, 6), 2, 2);
    double e1 = testing::uniform_real(rng, 1e-6, 1.5);
    double e2 = testing::uniform_real(rng, 1e-6, 1.5);
    if (e1 > e2) std::swap(e1, e2);
    if (eps_close_predicate(a, b, e1)) CHECK(eps_close_predicate(a, b, e2));
    // The closed-form value is the threshold of the strict predicate.
    const auto v = directed_distance(a, b).value;
    if (v.is_finite()) {
      if (v.value() > 0.0) CHECK_FALSE(eps_close_predicate(a, b, v.value()));
      CHECK(eps_close_predicate(a, b, std::nextafter(v.value(), 1e300)));
    }
  }
}

TEST_CASE("betti numbers over GF(2)", "[verify]") {
  const auto hollow = closure(std::vector{Simplex{0, 1}, Simplex{1, 2}, Simplex{0, 2}});
  const auto solid = closure(std::vector{Simplex{0, 1, 2}});
  const auto points = closure(std::vector{Simplex{0}, Simplex{1}});
  CHECK(betti_gf2(hollow, 1).values == std::vector<long>{1, 1});
  CHECK(betti_gf2(solid, 1).values == std::vector<long>{1, 0});
  CHECK(betti_gf2(points, 1).values == std::vector<long>{2, 0});

  // Boundary of a tetrahedron is a 2-sphere.
  const auto sphere = closure(std::vector{Simplex{0, 1, 2}, Simplex{0, 1, 3}, Simplex{0, 2, 3}, Simplex{1, 2, 3}});
  CHECK(betti_gf2(sphere, 2).values == std::vector<long>{1, 0, 1});
  CHECK(betti_gf2(closure(std::vector{Simplex{0, 1, 2, 3}}), 2).values == std::vector<long>{1, 0, 0});

  CHECK_THROWS_AS(betti_gf2(solid, 3), Error);
  CHECK_THROWS_AS(betti_gf2(solid, -1), Error);
  CHECK_THROWS_AS(betti_gf2(SimplicialComplex{}, 1), Error);
}

TEST_CASE("betti invariants", "[verify][property]") {
  testing::Rng rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = testing::random_complex(rng, testing::uniform_int(rng, 1, 8), 3);
    const auto b = betti_gf2(k, 2);
    // beta_0 counts components.
    CHECK(b.values[0] == static_cast<long>(testing::component_count(k)));
    // Euler characteristic of a complex of dimension <= 2.
    if (k.dimension() <= 2) {
      long chi = 0;
      for (int d = 0; d <= k.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(k.simplices(d).size());
      CHECK(chi == b.values[0] - b.values[1] + b.values[2]);
    }
  }
}
