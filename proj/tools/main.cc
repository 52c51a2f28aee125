// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line entry point; see cli.h for the subcommands.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli.h"

namespace {

using fairkc::cli::RunConfig;

void AddSearchFlags(CLI::App* app, RunConfig* config) {
  app->add_option("--algo", config->algo, "fpt | charikar | gonzalez | oracle")
      ->check(CLI::IsMember({"fpt", "charikar", "gonzalez", "oracle"}));
  app->add_option("--colorings", config->colorings,
                  "exhaustive | random | random:<T> | auto");
  app->add_option("--radius", config->radius, "scan | binary")
      ->check(CLI::IsMember({"scan", "binary"}));
  app->add_option("--seed", config->seed, "coloring seed");
  app->add_option("--max-nodes", config->max_nodes, "node limit per radius");
  app->add_option("--time-budget-ms", config->time_budget_ms, "time limit per radius");
  app->add_flag("--verify-metric", config->verify_metric,
                "refuse inputs violating the metric axioms");
}

void AddGenFlags(CLI::App* app, RunConfig* config, std::string* problem,
                 std::string* scheme) {
  fairkc::GenSpec& g = config->gen;
  app->add_option("--problem", *problem,
                  "fair_kcenter | fair_range | fair_supplier | colorful");
  app->add_option("--scheme", *scheme, "uniform | skewed | forbidden");
  app->add_option("--n", g.n, "points (clients for supplier variants)");
  app->add_option("--k", g.k);
  app->add_option("--z", g.z);
  app->add_option("--dim", g.dim);
  app->add_flag("--matrix", g.matrix, "emit an integer L1 distance matrix");
  app->add_option("--sigma", g.sigma, "cluster spread");
  app->add_option("--separation", g.separation, "distance between planted centers");
  app->add_option("--outliers", g.outliers, "planted strays (default z)");
  app->add_option("--displacement", g.displacement, "stray distance");
  app->add_option("--groups", g.groups);
  app->add_option("--max-bound", g.max_bound, "per-group upper bound cap");
  app->add_option("--facilities", g.facilities, "supplier variants");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fair k-center and k-supplier with outliers"};
  app.require_subcommand(1);
  RunConfig config;
  std::string problem = "fair_kcenter", scheme = "uniform";

  CLI::App* gen = app.add_subcommand("gen", "generate a seeded instance");
  gen->add_option("--seed", config.seed);
  gen->add_option("-o,--output", config.output);
  AddGenFlags(gen, &config, &problem, &scheme);

  CLI::App* solve = app.add_subcommand("solve", "solve an instance");
  solve->add_option("input", config.input, "instance JSON (default stdin)");
  solve->add_option("-o,--output", config.output);
  solve->add_flag("--trace", config.trace, "include the branch trace");
  int solve_verbosity = 0, verify_verbosity = 0;
  solve->add_flag("-v,--verbose", solve_verbosity);
  AddSearchFlags(solve, &config);

  CLI::App* oracle = app.add_subcommand("oracle", "exact optimum by enumeration");
  oracle->add_option("input", config.input);
  oracle->add_option("-o,--output", config.output);
  oracle->add_flag("--verify-metric", config.verify_metric);

  CLI::App* verify = app.add_subcommand("verify", "re-check a solution");
  verify->add_option("input", config.input)->required();
  verify->add_option("solution", config.solution)->required();
  verify->add_flag("--verify-metric", config.verify_metric);
  verify->add_flag("-v,--verbose", verify_verbosity);

  CLI::App* bench = app.add_subcommand("bench", "seeded batch to CSV");
  bench->add_option("--count", config.count, "instances, seeds seed..seed+count-1");
  bench->add_option("--algos", config.algos, "algorithms per instance")->delimiter(',');
  bench->add_flag("--oracle", config.with_oracle, "compute opt and ratio");
  bench->add_option("-o,--output", config.output);
  AddGenFlags(bench, &config, &problem, &scheme);
  bench->add_option("--colorings", config.colorings);
  bench->add_option("--radius", config.radius)->check(CLI::IsMember({"scan", "binary"}));
  bench->add_option("--seed", config.seed, "first instance seed");
  bench->add_option("--max-nodes", config.max_nodes);
  bench->add_option("--time-budget-ms", config.time_budget_ms);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fairkc::cli::kUsage;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  config.verbosity = solve_verbosity + verify_verbosity;
  if (!fairkc::cli::ParseProblem(problem, &config.gen.problem) ||
      !fairkc::cli::ParseScheme(scheme, &config.gen.scheme)) {
    std::cerr << "error: unknown --problem or --scheme\n";
    return fairkc::cli::kUsage;
  }
  return fairkc::cli::Run(config, std::cout, std::cerr);
}
