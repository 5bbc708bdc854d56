#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace shd::cli {

enum class Command { Rips, Dist, FiltDist, Hausdorff, Collapse, Bench };
enum class Format { Json, Plain };

struct BenchConfig {
  std::size_t first = 10;
  std::size_t last = 30;
  std::size_t step = 5;
  std::size_t ambient_dim = 2;
  std::optional<double> scale;  // default: diameter of the unit cube, i.e. complete complexes
  std::uint64_t seed = 20240611;
  double min_seconds = 0.2;     // repeat each measurement until this much time has passed
};

struct RunConfig {
  Command command = Command::Dist;
  std::vector<std::filesystem::path> inputs;
  std::optional<double> scale;
  int max_dim = 2;
  bool header = false;
  bool quotient = false;
  bool directed = false;  // hausdorff: one-sided
  bool core = false;      // collapse: continue to the strong collapse core
  std::optional<std::filesystem::path> output;
  Format format = Format::Json;
  BenchConfig bench;
};

/// Exit codes: 0 success, 2 input error, 1 internal error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

struct BenchRow {
  std::size_t points;
  std::size_t simplices_a;
  std::size_t simplices_b;
  double seconds;  // mean wall time of one simplicial_hausdorff call
};

struct BenchReport {
  std::vector<BenchRow> rows;
  double slope;  // least-squares slope of log(seconds) against log(points)
  double scale;
};

/// Times simplicial_hausdorff between two uniform random clouds in the unit
/// cube for each size in first..last (inclusive, by step).
BenchReport run_bench(const BenchConfig& config, int max_dim);

double loglog_slope(const std::vector<BenchRow>& rows);

/// "a:b:s" -> (a, b, s). Throws shd::Error(InvalidArgument).
void parse_sizes(const std::string& text, BenchConfig& config);

}  // namespace shd::cli
