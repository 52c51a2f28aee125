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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "fairkc/baselines.h"
#include "fairkc/json_io.h"
#include "fairkc/oracle.h"
#include "fairkc/solver.h"

namespace fairkc::cli {
namespace {

// Status carrying the exit code it should map to.
struct Failure {
  int code;
  std::string message;
};

int CodeFor(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kResourceExhausted:
    case absl::StatusCode::kDeadlineExceeded:
      return kResource;
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kFailedPrecondition:
      return kInfeasible;
    default:
      return kUsage;
  }
}

Failure FromStatus(const absl::Status& status) {
  return {CodeFor(status), std::string(status.message())};
}

std::string FormatLength(double value) {
  if (value == std::numeric_limits<double>::infinity()) return "inf";
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

absl::StatusOr<std::string> ReadText(const std::string& path) {
  if (path.empty() || path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::InvalidArgumentError(absl::StrCat("cannot read ", path));
  return std::string(std::istreambuf_iterator<char>(in), {});
}

absl::Status WriteText(const std::string& path, const std::string& text,
                       std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return absl::OkStatus();
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) return absl::InvalidArgumentError(absl::StrCat("cannot write ", path));
  file << text;
  return absl::OkStatus();
}

absl::StatusOr<AnyInstance> LoadInstance(const std::string& path) {
  auto text = ReadText(path);
  if (!text.ok()) return text.status();
  auto json = ParseJson(*text);
  if (!json.ok()) return json.status();
  return InstanceFromJson(*json);
}

// Structural problems are schema errors; bound systems no center set can
// satisfy make the instance infeasible.
std::optional<Failure> CheckInstance(const AnyInstance& instance, bool verify_metric) {
  const ValidationReport report = Validate(instance);
  if (!report.ok()) {
    const bool infeasible =
        std::all_of(report.issues.begin(), report.issues.end(), [](const auto& issue) {
          return issue.code == ValidationIssue::Code::kAggregateBoundsBelowK ||
                 issue.code == ValidationIssue::Code::kInfeasibleRange;
        });
    return Failure{infeasible ? kInfeasible : kUsage,
                   absl::StrCat("invalid instance: ", report.ToString())};
  }
  if (verify_metric) {
    const MetricReport metric = VerifyMetric(MetricOf(instance));
    if (!metric.ok()) {
      std::vector<std::string> shown;
      for (const MetricViolation& v : metric.violations) shown.push_back(v.ToString());
      return Failure{kUsage, absl::StrCat("not a metric: ", absl::StrJoin(shown, "; "))};
    }
  }
  return std::nullopt;
}

struct Options {
  PipelineOptions pipeline;
};

std::optional<Failure> BuildOptions(const RunConfig& config, Options* options) {
  const bool fpt = config.algo == "fpt";
  if (config.algo != "fpt" && config.algo != "charikar" && config.algo != "gonzalez" &&
      config.algo != "oracle")
    return Failure{kUsage, absl::StrCat("unknown --algo ", config.algo)};
  if (!fpt && (config.colorings || config.radius || config.max_nodes ||
               config.time_budget_ms || config.trace))
    return Failure{kUsage,
                   "--colorings, --radius, --max-nodes, --time-budget-ms and --trace "
                   "apply to --algo fpt only"};
  PipelineOptions& p = options->pipeline;
  p.seed = config.seed;
  if (config.colorings) {
    const std::string& mode = *config.colorings;
    if (mode == "exhaustive") {
      p.coloring_mode = ColoringMode::kExhaustive;
    } else if (mode == "auto") {
      p.coloring_mode = ColoringMode::kAuto;
    } else if (mode == "random") {
      p.coloring_mode = ColoringMode::kRandom;
    } else if (mode.rfind("random:", 0) == 0) {
      p.coloring_mode = ColoringMode::kRandom;
      if (!absl::SimpleAtoi(mode.substr(7), &p.trials) || p.trials == 0)
        return Failure{kUsage, absl::StrCat("bad trial count in --colorings ", mode)};
    } else {
      return Failure{kUsage, absl::StrCat("unknown --colorings ", mode)};
    }
  }
  if (config.radius) {
    if (*config.radius == "scan")
      p.colorful.radius_mode = RadiusMode::kScan;
    else if (*config.radius == "binary")
      p.colorful.radius_mode = RadiusMode::kBinary;
    else
      return Failure{kUsage, absl::StrCat("unknown --radius ", *config.radius)};
  }
  if (config.max_nodes) p.colorful.limits.max_nodes = *config.max_nodes;
  if (config.time_budget_ms)
    p.colorful.limits.time_budget = std::chrono::milliseconds(*config.time_budget_ms);
  return std::nullopt;
}

struct SolveResult {
  Solution solution;
  uint64_t nodes = 0;
};

// Solution from the selected algorithm; baselines ignore group bounds.
absl::StatusOr<SolveResult> SolveWith(const std::string& algo,
                                      const AnyInstance& instance,
                                      const Options& options, int verbosity,
                                      std::ostream& err) {
  SolveResult result;
  if (algo == "fpt") {
    auto report = SolvePipeline(instance, options.pipeline);
    if (!report.ok()) return report.status();
    if (verbosity > 0) {
      err << "colorings: " << report->coloring_mode << ", " << report->colorings_total
          << " tried, " << report->colorings_solved << " solved, "
          << report->skipped_relabelings << " relabelings skipped, "
          << report->lower_bound_rejections << " rejected by bounds, "
          << report->empty_class_discards << " empty-class draws\n"
          << "search: " << report->stats.nodes << " nodes, "
          << report->stats.radii_tried << " radii, " << report->stats.memo_hits
          << " memo hits\n";
    }
    result.nodes = report->stats.nodes;
    if (!report->solution) return absl::NotFoundError(report->failure);
    result.solution = *std::move(report->solution);
    return result;
  }
  if (algo == "oracle") {
    auto opt = BruteForce(instance);
    if (!opt.ok()) return opt.status();
    result.solution.centers = opt->centers;
    result.solution.center_groups = opt->center_groups;
  } else {
    if (std::holds_alternative<FairSupplierInstance>(instance) ||
        std::holds_alternative<ColorfulInstance>(instance))
      return absl::InvalidArgumentError(
          absl::StrCat("--algo ", algo, " needs a k-center instance"));
    auto baseline = algo == "charikar"
                        ? CharikarScan(MetricOf(instance), KOf(instance), ZOf(instance))
                        : Gonzalez(MetricOf(instance), KOf(instance));
    if (!baseline.ok()) return baseline.status();
    result.solution.centers = baseline->centers;
    result.solution.center_groups.assign(baseline->centers.size(), -1);
  }
  // Cost under the instance's own client set and outlier budget.
  auto cost = Cost(instance, result.solution.centers);
  if (!cost.ok()) return cost.status();
  result.solution.cost = cost->cost;
  result.solution.outliers = cost->outliers;
  if (!CheckFeasibility(instance, result.solution.centers).feasible && verbosity >= 0)
    err << "warning: " << algo << " solution violates the group bounds\n";
  return result;
}

int Fail(const Failure& failure, std::ostream& err) {
  err << "error: " << failure.message << "\n";
  return failure.code;
}

int RunGen(const RunConfig& config, std::ostream& out, std::ostream& err) {
  GenSpec spec = config.gen;
  spec.seed = config.seed;
  auto instance = Generate(spec);
  if (!instance.ok()) return Fail({kUsage, std::string(instance.status().message())}, err);
  if (auto s = WriteText(config.output, Dump(InstanceToJson(*instance)), out); !s.ok())
    return Fail(FromStatus(s), err);
  return kOk;
}

int RunSolve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Options options;
  if (auto f = BuildOptions(config, &options)) return Fail(*f, err);
  auto instance = LoadInstance(config.input);
  if (!instance.ok()) return Fail({kUsage, std::string(instance.status().message())}, err);
  if (auto f = CheckInstance(*instance, config.verify_metric)) return Fail(*f, err);
  auto result = SolveWith(config.algo, *instance, options, config.verbosity, err);
  if (!result.ok()) return Fail(FromStatus(result.status()), err);
  Solution& solution = result->solution;
  if (!config.trace) solution.trace.reset();
  if (auto s = WriteText(config.output, Dump(SolutionToJson(solution)), out); !s.ok())
    return Fail(FromStatus(s), err);
  return kOk;
}

int RunOracle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto instance = LoadInstance(config.input);
  if (!instance.ok()) return Fail({kUsage, std::string(instance.status().message())}, err);
  if (auto f = CheckInstance(*instance, config.verify_metric)) return Fail(*f, err);
  auto opt = BruteForce(*instance);
  if (!opt.ok()) return Fail(FromStatus(opt.status()), err);
  if (auto s = WriteText(config.output, Dump(OracleToJson(*opt)), out); !s.ok())
    return Fail(FromStatus(s), err);
  return kOk;
}

int RunVerify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  auto instance = LoadInstance(config.input);
  if (!instance.ok()) return Fail({kUsage, std::string(instance.status().message())}, err);
  if (auto f = CheckInstance(*instance, config.verify_metric)) return Fail(*f, err);
  auto text = ReadText(config.solution);
  if (!text.ok()) return Fail({kUsage, std::string(text.status().message())}, err);
  auto json = ParseJson(*text);
  if (!json.ok()) return Fail({kUsage, std::string(json.status().message())}, err);
  auto solution = SolutionFromJson(*json);
  if (!solution.ok()) return Fail({kUsage, std::string(solution.status().message())}, err);

  std::vector<std::string> mismatches;
  const std::size_t n = MetricOf(*instance).size();
  for (PointId c : solution->centers)
    if (c < 0 || static_cast<std::size_t>(c) >= n)
      mismatches.push_back(absl::StrCat("center ", c, " out of range"));
  if (mismatches.empty()) {
    const FeasibilityReport feasibility = CheckFeasibility(*instance, solution->centers);
    for (const std::string& v : feasibility.violations) mismatches.push_back(v);
    if (!feasibility.feasible && feasibility.violations.empty())
      mismatches.push_back("center set is infeasible");
    auto cost = Cost(*instance, solution->centers);
    if (!cost.ok()) {
      mismatches.push_back(std::string(cost.status().message()));
    } else {
      if (cost->cost != solution->cost)
        mismatches.push_back(absl::StrCat("cost ", FormatLength(solution->cost),
                                          " but recomputed ", FormatLength(cost->cost)));
      std::vector<PointId> claimed = solution->outliers;
      std::sort(claimed.begin(), claimed.end());
      if (claimed != cost->outliers)
        mismatches.push_back(absl::StrCat("outliers [", absl::StrJoin(claimed, ","),
                                          "] but recomputed [",
                                          absl::StrJoin(cost->outliers, ","), "]"));
    }
    if (solution->trace &&
        solution->trace->steps.size() > static_cast<std::size_t>(KOf(*instance)))
      mismatches.push_back("trace longer than k");
  }
  if (!mismatches.empty()) {
    for (const std::string& m : mismatches) err << "mismatch: " << m << "\n";
    return kMismatch;
  }
  if (config.verbosity > 0) err << "ok\n";
  (void)out;
  return kOk;
}

int RunBench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  for (const std::string& algo : config.algos)
    if (algo != "fpt" && algo != "charikar" && algo != "gonzalez" && algo != "oracle")
      return Fail({kUsage, absl::StrCat("unknown algo ", algo, " in --algos")}, err);
  // Search flags configure the fpt cells and are ignored by the others.
  RunConfig fpt = config;
  fpt.algo = "fpt";
  fpt.trace = false;
  Options options;
  if (auto f = BuildOptions(fpt, &options)) return Fail(*f, err);
  if (config.count < 1) return Fail({kUsage, "--count must be positive"}, err);

  struct Row {
    uint64_t seed;
    std::size_t algo;
    std::string line;
  };
  std::vector<Row> rows;
  int worst = kOk;
  for (int i = 0; i < config.count; ++i) {
    GenSpec spec = config.gen;
    spec.seed = config.seed + i;
    auto instance = Generate(spec);
    if (!instance.ok()) return Fail({kUsage, std::string(instance.status().message())}, err);
    std::optional<Length> opt;
    if (config.with_oracle) {
      auto oracle = BruteForce(*instance);
      if (oracle.ok())
        opt = oracle->radius;
      else
        err << "seed " << spec.seed << ": oracle: " << oracle.status().message() << "\n";
    }
    for (std::size_t a = 0; a < config.algos.size(); ++a) {
      const std::string& algo = config.algos[a];
      const auto start = std::chrono::steady_clock::now();
      auto result = SolveWith(algo, *instance, options, -1, err);
      const double wall_ms = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
      std::string cost, ratio, nodes;
      if (result.ok()) {
        cost = FormatLength(result->solution.cost);
        nodes = absl::StrCat(result->nodes);
        if (opt) {
          const Length c = result->solution.cost;
          ratio = *opt > 0 ? FormatLength(c / *opt)
                           : (c == 0 ? "1" : "inf");
        }
      } else {
        err << "seed " << spec.seed << " " << algo << ": "
            << result.status().message() << "\n";
        worst = std::max(worst, CodeFor(result.status()));
      }
      char wall[32];
      std::snprintf(wall, sizeof(wall), "%.3f", wall_ms);
      rows.push_back({spec.seed, a,
                      absl::StrCat(spec.seed, ",", spec.n, ",", spec.k, ",", spec.z, ",",
                                   algo, ",", cost, ",",
                                   opt ? FormatLength(*opt) : "", ",", ratio, ",",
                                   nodes, ",", wall)});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.seed, a.algo) < std::tie(b.seed, b.algo);
  });
  std::string csv = absl::StrCat(kBenchHeader, "\n");
  for (const Row& row : rows) absl::StrAppend(&csv, row.line, "\n");
  if (auto s = WriteText(config.output, csv, out); !s.ok()) return Fail(FromStatus(s), err);
  return worst;
}

}  // namespace

bool ParseProblem(const std::string& name, GenSpec::Problem* problem) {
  if (name == "fair_kcenter") *problem = GenSpec::Problem::kFairKCenter;
  else if (name == "fair_range") *problem = GenSpec::Problem::kFairRange;
  else if (name == "fair_supplier") *problem = GenSpec::Problem::kFairSupplier;
  else if (name == "colorful") *problem = GenSpec::Problem::kColorful;
  else return false;
  return true;
}

bool ParseScheme(const std::string& name, GenSpec::GroupScheme* scheme) {
  if (name == "uniform") *scheme = GenSpec::GroupScheme::kUniform;
  else if (name == "skewed") *scheme = GenSpec::GroupScheme::kSkewed;
  else if (name == "forbidden") *scheme = GenSpec::GroupScheme::kForbidden;
  else return false;
  return true;
}

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.subcommand == "gen") return RunGen(config, out, err);
  if (config.subcommand == "solve") return RunSolve(config, out, err);
  if (config.subcommand == "oracle") return RunOracle(config, out, err);
  if (config.subcommand == "verify") return RunVerify(config, out, err);
  if (config.subcommand == "bench") return RunBench(config, out, err);
  return Fail({kUsage, absl::StrCat("unknown subcommand '", config.subcommand, "'")}, err);
}

}  // namespace fairkc::cli
