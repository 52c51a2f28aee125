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

#ifndef FAIRKC_TOOLS_CLI_H_
#define FAIRKC_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fairkc/generator.h"

namespace fairkc::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,  // also schema and parse errors
  kInfeasible = 2,
  kResource = 3,
  kMismatch = 4,
};

struct RunConfig {
  std::string subcommand;  // gen | solve | oracle | verify | bench
  std::string input;       // instance path; "-" or empty reads stdin
  std::string solution;    // verify: solution path
  std::string output;      // empty or "-" writes stdout

  // Unset options keep their defaults; set ones are checked against `algo`.
  std::string algo = "fpt";  // fpt | charikar | gonzalez | oracle
  std::optional<std::string> colorings;  // exhaustive | random | random:<T>
  std::optional<std::string> radius;     // scan | binary
  uint64_t seed = 0;
  std::optional<uint64_t> max_nodes;
  std::optional<uint64_t> time_budget_ms;
  bool trace = false;
  bool verify_metric = false;
  int verbosity = 0;

  GenSpec gen;  // gen and bench

  // bench
  int count = 10;
  std::vector<std::string> algos = {"fpt"};
  bool with_oracle = false;
};

// Executes one subcommand. Artifacts go to config.output (or `out`);
// diagnostics go to `err`.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses "fair_kcenter" etc. and "uniform" etc.; false on unknown names.
bool ParseProblem(const std::string& name, GenSpec::Problem* problem);
bool ParseScheme(const std::string& name, GenSpec::GroupScheme* scheme);

// Fixed bench CSV header, without the trailing newline.
inline constexpr char kBenchHeader[] = "seed,n,k,z,algo,cost,opt,ratio,nodes,wall_ms";

}  // namespace fairkc::cli

#endif  // FAIRKC_TOOLS_CLI_H_
