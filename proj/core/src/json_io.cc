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

#include "fairkc/json_io.h"

#include <exception>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace fairkc {
namespace {

using Ids = std::vector<PointId>;
using IdLists = std::vector<std::vector<PointId>>;

// nlohmann reports schema mismatches as exceptions; they stay inside this
// file and leave as InvalidArgument.
template <typename F>
auto Guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("schema error: ", e.what()));
  }
}

const Json& Field(const Json& json, const char* key) {
  if (!json.is_object()) throw std::runtime_error("expected a JSON object");
  auto it = json.find(key);
  if (it == json.end()) throw std::runtime_error(absl::StrCat("missing \"", key, "\""));
  return *it;
}

Json MetricToJson(const Metric& metric) {
  Json out = Json::object();
  if (metric.kind() == Metric::Kind::kCoords)
    out["coords"] = metric.coords();
  else
    out["matrix"] = metric.ToMatrix();
  return out;
}

Metric MetricFromJson(const Json& json) {
  if (!json.is_object()) throw std::runtime_error("\"metric\" must be an object");
  absl::StatusOr<Metric> metric;
  if (json.contains("matrix"))
    metric = Metric::FromMatrix(json["matrix"].get<std::vector<std::vector<Length>>>());
  else if (json.contains("coords"))
    metric = Metric::FromCoords(json["coords"].get<std::vector<std::vector<double>>>());
  else
    throw std::runtime_error("\"metric\" needs \"matrix\" or \"coords\"");
  if (!metric.ok()) throw std::runtime_error(std::string(metric.status().message()));
  return *std::move(metric);
}

const char* DecisionName(TraceStep::Decision d) {
  return d == TraceStep::Decision::kEasy ? "easy" : "hard";
}

Json StatsToJson(const SearchStats& s) {
  Json out = Json::object();
  out["nodes"] = s.nodes;
  out["settle_calls"] = s.settle_calls;
  out["memo_hits"] = s.memo_hits;
  out["bound_prunes"] = s.bound_prunes;
  out["hard_picks_without_center"] = s.hard_picks_without_center;
  out["geometry_violations"] = s.geometry_violations;
  out["ball_cap_violations"] = s.ball_cap_violations;
  out["max_balls_per_call"] = s.max_balls_per_call;
  out["max_nodes_per_radius"] = s.max_nodes_per_radius;
  out["radii_tried"] = s.radii_tried;
  return out;
}

SearchStats StatsFromJson(const Json& json) {
  SearchStats s;
  s.nodes = json.value("nodes", uint64_t{0});
  s.settle_calls = json.value("settle_calls", uint64_t{0});
  s.memo_hits = json.value("memo_hits", uint64_t{0});
  s.bound_prunes = json.value("bound_prunes", uint64_t{0});
  s.hard_picks_without_center = json.value("hard_picks_without_center", uint64_t{0});
  s.geometry_violations = json.value("geometry_violations", uint64_t{0});
  s.ball_cap_violations = json.value("ball_cap_violations", uint64_t{0});
  s.max_balls_per_call = json.value("max_balls_per_call", uint64_t{0});
  s.max_nodes_per_radius = json.value("max_nodes_per_radius", uint64_t{0});
  s.radii_tried = json.value("radii_tried", uint64_t{0});
  return s;
}

BranchTrace TraceFromJsonOrThrow(const Json& json) {
  BranchTrace trace;
  trace.radius = Field(json, "radius").get<Length>();
  for (const Json& it : Field(json, "iterations")) {
    TraceStep step;
    step.iteration = Field(it, "iteration").get<int>();
    step.build_color = Field(it, "build_color").get<int>();
    const std::string decision = Field(it, "decision").get<std::string>();
    if (decision == "easy")
      step.decision = TraceStep::Decision::kEasy;
    else if (decision == "hard")
      step.decision = TraceStep::Decision::kHard;
    else
      throw std::runtime_error(absl::StrCat("unknown decision \"", decision, "\""));
    step.ball_centers = Field(it, "ball_centers").get<Ids>();
    step.ball_index = it.value("ball_index", -1);
    step.ball_a = it.value("ball_a", -1);
    step.ball_b = it.value("ball_b", -1);
    step.committed = Field(it, "committed").get<PointId>();
    step.marked = Field(it, "marked").get<int>();
    step.covered_new = Field(it, "covered_new").get<int>();
    trace.steps.push_back(std::move(step));
  }
  if (json.contains("coloring")) {
    const Json& c = json["coloring"];
    ColoringProvenance p;
    p.mode = Field(c, "mode").get<std::string>();
    if (c.contains("seed")) p.seed = c["seed"].get<uint64_t>();
    if (c.contains("enumeration_index"))
      p.enumeration_index = c["enumeration_index"].get<uint64_t>();
    p.assignment = Field(c, "assignment").get<std::vector<int>>();
    trace.coloring = std::move(p);
  }
  if (json.contains("stats")) trace.stats = StatsFromJson(json["stats"]);
  return trace;
}

OracleClustering OracleFromJsonOrThrow(const Json& json) {
  OracleClustering out;
  out.radius = Field(json, "radius").get<Length>();
  out.centers = Field(json, "centers").get<Ids>();
  out.center_groups = Field(json, "center_groups").get<std::vector<int>>();
  out.clusters = Field(json, "clusters").get<IdLists>();
  out.outliers = Field(json, "outliers").get<Ids>();
  return out;
}

}  // namespace

Json InstanceToJson(const AnyInstance& instance) {
  Json out = Json::object();
  out["kind"] = KindName(instance);
  out["metric"] = MetricToJson(MetricOf(instance));
  std::visit(
      [&out](const auto& in) {
        using T = std::decay_t<decltype(in)>;
        if constexpr (std::is_same_v<T, FairSupplierInstance> ||
                      std::is_same_v<T, ColorfulInstance>) {
          Json roles = Json::object();
          roles["facilities"] = in.facilities;
          roles["clients"] = in.clients;
          out["roles"] = std::move(roles);
        }
        out["k"] = in.k;
        out["z"] = in.z;
        if constexpr (std::is_same_v<T, ColorfulInstance>)
          out["groups"] = in.classes;
        else
          out["groups"] = in.groups;
        if constexpr (std::is_same_v<T, FairKCenterInstance> ||
                      std::is_same_v<T, FairRangeInstance>)
          out["upper_bounds"] = in.upper_bounds;
        if constexpr (std::is_same_v<T, FairRangeInstance>)
          out["lower_bounds"] = in.lower_bounds;
      },
      instance);
  return out;
}

absl::StatusOr<AnyInstance> InstanceFromJson(const Json& json) {
  return Guard([&]() -> absl::StatusOr<AnyInstance> {
    const std::string kind = Field(json, "kind").get<std::string>();
    Metric metric = MetricFromJson(Field(json, "metric"));
    const int k = Field(json, "k").get<int>();
    const int z = Field(json, "z").get<int>();
    IdLists groups = Field(json, "groups").get<IdLists>();
    if (kind == "fair_kcenter")
      return FairKCenterInstance{metric, k, z, std::move(groups),
                                 Field(json, "upper_bounds").get<std::vector<int>>()};
    if (kind == "fair_range")
      return FairRangeInstance{metric, k, z, std::move(groups),
                               Field(json, "lower_bounds").get<std::vector<int>>(),
                               Field(json, "upper_bounds").get<std::vector<int>>()};
    if (kind != "fair_supplier" && kind != "colorful")
      return absl::InvalidArgumentError(absl::StrCat("unknown kind \"", kind, "\""));
    Ids facilities = AllPoints(metric), clients = AllPoints(metric);
    if (json.contains("roles")) {
      facilities = Field(json["roles"], "facilities").get<Ids>();
      clients = Field(json["roles"], "clients").get<Ids>();
    }
    if (kind == "colorful")
      return ColorfulInstance{metric, std::move(facilities), std::move(clients),
                              k, z, std::move(groups)};
    return FairSupplierInstance{metric, std::move(facilities), std::move(clients),
                                k, z, std::move(groups)};
  });
}

Json TraceToJson(const BranchTrace& trace) {
  Json out = Json::object();
  out["radius"] = trace.radius;
  Json iterations = Json::array();
  for (const TraceStep& step : trace.steps) {
    Json it = Json::object();
    it["iteration"] = step.iteration;
    it["build_color"] = step.build_color;
    it["decision"] = DecisionName(step.decision);
    it["ball_centers"] = step.ball_centers;
    if (step.decision == TraceStep::Decision::kEasy) {
      it["ball_index"] = step.ball_index;
    } else {
      it["ball_a"] = step.ball_a;
      it["ball_b"] = step.ball_b;
    }
    it["committed"] = step.committed;
    it["marked"] = step.marked;
    it["covered_new"] = step.covered_new;
    iterations.push_back(std::move(it));
  }
  out["iterations"] = std::move(iterations);
  if (trace.coloring) {
    Json c = Json::object();
    c["mode"] = trace.coloring->mode;
    if (trace.coloring->seed) c["seed"] = *trace.coloring->seed;
    if (trace.coloring->enumeration_index)
      c["enumeration_index"] = *trace.coloring->enumeration_index;
    c["assignment"] = trace.coloring->assignment;
    out["coloring"] = std::move(c);
  }
  out["stats"] = StatsToJson(trace.stats);
  return out;
}

absl::StatusOr<BranchTrace> TraceFromJson(const Json& json) {
  return Guard([&]() -> absl::StatusOr<BranchTrace> { return TraceFromJsonOrThrow(json); });
}

Json SolutionToJson(const Solution& solution) {
  Json out = Json::object();
  out["cost"] = solution.cost;
  out["centers"] = solution.centers;
  out["outliers"] = solution.outliers;
  if (solution.trace) out["trace"] = TraceToJson(*solution.trace);
  return out;
}

absl::StatusOr<Solution> SolutionFromJson(const Json& json) {
  return Guard([&]() -> absl::StatusOr<Solution> {
    Solution s;
    s.cost = Field(json, "cost").get<Length>();
    s.centers = Field(json, "centers").get<Ids>();
    s.outliers = Field(json, "outliers").get<Ids>();
    s.center_groups.assign(s.centers.size(), -1);
    if (json.contains("trace")) s.trace = TraceFromJsonOrThrow(json["trace"]);
    return s;
  });
}

Json OracleToJson(const OracleClustering& clustering) {
  Json out = Json::object();
  out["radius"] = clustering.radius;
  out["centers"] = clustering.centers;
  out["center_groups"] = clustering.center_groups;
  out["clusters"] = clustering.clusters;
  out["outliers"] = clustering.outliers;
  return out;
}

absl::StatusOr<OracleClustering> OracleFromJson(const Json& json) {
  return Guard(
      [&]() -> absl::StatusOr<OracleClustering> { return OracleFromJsonOrThrow(json); });
}

std::string Dump(const Json& json) { return json.dump(2) + "\n"; }

absl::StatusOr<Json> ParseJson(std::string_view text) {
  return Guard([&]() -> absl::StatusOr<Json> { return Json::parse(text); });
}

}  // namespace fairkc
