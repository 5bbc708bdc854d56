#include <chrono>
#include <cmath>
#include <random>

#include "commands.hpp"
#include "shd/distance.hpp"
#include "shd/error.hpp"
#include "shd/rips.hpp"

namespace shd::cli {

namespace {

PointCloud uniform_cloud(std::size_t points, std::size_t dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> flat(points * dim);
  for (double& x : flat) x = unit(rng);
  return PointCloud(dim, std::move(flat));
}

}  // namespace

double loglog_slope(const std::vector<BenchRow>& rows) {
  const auto n = static_cast<double>(rows.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    const double x = std::log(static_cast<double>(r.points));
    const double y = std::log(r.seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
}

BenchReport run_bench(const BenchConfig& config, int max_dim) {
  if (config.step == 0 || config.first == 0 || config.first > config.last || config.ambient_dim == 0) {
    throw Error(ErrorCode::InvalidArgument, "invalid benchmark range");
  }
  using clock = std::chrono::steady_clock;
  const double scale = config.scale.value_or(std::sqrt(static_cast<double>(config.ambient_dim)));
  BenchReport report{{}, 0.0, scale};
  std::mt19937_64 rng(config.seed);

  for (std::size_t p = config.first; p <= config.last; p += config.step) {
    const LabeledComplex a = build_rips(uniform_cloud(p, config.ambient_dim, rng), {scale, max_dim});
    const LabeledComplex b = build_rips(uniform_cloud(p, config.ambient_dim, rng), {scale, max_dim});

    std::size_t runs = 0;
    const auto start = clock::now();
    std::chrono::duration<double> elapsed{};
    do {
      volatile double sink = simplicial_hausdorff(a, b).value();
      (void)sink;
      ++runs;
      elapsed = clock::now() - start;
    } while (elapsed.count() < config.min_seconds);

    report.rows.push_back({p, a.complex().size(), b.complex().size(), elapsed.count() / static_cast<double>(runs)});
  }
  report.slope = loglog_slope(report.rows);
  return report;
}

}  // namespace shd::cli
