#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "shd/error.hpp"

using shd::cli::Command;
using shd::cli::Format;
using shd::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Simplicial Hausdorff distances between labeled simplicial complexes"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "json";
  std::string sizes;
  std::string output;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--max-dim", config.max_dim, "Skeleton cap for Rips complexes")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "plain"}));
    sub->add_option("-o,--output", output, "Write the result here instead of stdout");
  };
  auto inputs = [&](CLI::App* sub, std::size_t n) {
    sub->add_option("inputs", config.inputs, n == 1 ? "Input file" : "Input files")->required()->expected(static_cast<int>(n));
    sub->add_flag("--header", config.header, "Skip the first CSV row");
    sub->add_flag("--quotient", config.quotient, "Identify coincident points before building complexes");
  };
  auto scale = [&](CLI::App* sub) { sub->add_option("--scale", config.scale, "Rips scale (edge iff distance <= scale)"); };

  std::map<CLI::App*, Command> commands;
  auto* rips = app.add_subcommand("rips", "Build a Vietoris-Rips complex from a CSV point cloud");
  common(rips);
  inputs(rips, 1);
  scale(rips);
  commands[rips] = Command::Rips;

  auto* dist = app.add_subcommand("dist", "Simplicial Hausdorff distance between two complexes");
  common(dist);
  inputs(dist, 2);
  scale(dist);
  commands[dist] = Command::Dist;

  auto* filtdist = app.add_subcommand("filtdist", "Filtered simplicial Hausdorff distance between two point clouds");
  common(filtdist);
  inputs(filtdist, 2);
  commands[filtdist] = Command::FiltDist;

  auto* hausdorff = app.add_subcommand("hausdorff", "Classical Hausdorff distance between vertex sets");
  common(hausdorff);
  inputs(hausdorff, 2);
  hausdorff->add_flag("--directed", config.directed, "One-sided distance from the first input to the second");
  commands[hausdorff] = Command::Hausdorff;

  auto* collapse = app.add_subcommand("collapse", "Collapse coincident vertices by strong collapses");
  common(collapse);
  inputs(collapse, 1);
  scale(collapse);
  collapse->add_flag("--core", config.core, "Continue to the strong collapse core");
  commands[collapse] = Command::Collapse;

  auto* bench = app.add_subcommand("bench", "Time dist on random clouds of growing size");
  common(bench);
  bench->add_option("--sizes", sizes, "first:last[:step]")->default_val("10:30:5");
  bench->add_option("--dim", config.bench.ambient_dim, "Ambient dimension of the random clouds");
  bench->add_option("--scale", config.bench.scale, "Rips scale (default: unit-cube diameter)");
  bench->add_option("--seed", config.bench.seed, "RNG seed");
  bench->add_option("--min-time", config.bench.min_seconds, "Seconds to repeat each measurement for");
  commands[bench] = Command::Bench;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) config.command = cmd;
  }
  config.format = format == "plain" ? Format::Plain : Format::Json;
  if (!output.empty()) config.output = output;
  if (config.command == Command::Bench) {
    try {
      shd::cli::parse_sizes(sizes, config.bench);
    } catch (const shd::Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 2;
    }
  }
  return shd::cli::run(config, std::cout, std::cerr);
}
