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

#ifndef FAIRKC_JSON_IO_H_
#define FAIRKC_JSON_IO_H_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "absl/status/statusor.h"
#include "fairkc/instance.h"
#include "fairkc/oracle.h"

namespace fairkc {

// Key order is fixed by insertion, so equal values serialize to equal bytes.
using Json = nlohmann::ordered_json;

// Instance schema:
//   {"kind": "fair_kcenter" | "fair_supplier" | "colorful" | "fair_range",
//    "metric": {"matrix": [[...]]} | {"coords": [[...]]},
//    "roles": {"facilities": [...], "clients": [...]},  // supplier kinds only
//    "k": int, "z": int, "groups": [[...], ...],
//    "upper_bounds": [...], "lower_bounds": [...]}
// Colorful classes travel in "groups". Alias metrics are written as matrices.
Json InstanceToJson(const AnyInstance& instance);
absl::StatusOr<AnyInstance> InstanceFromJson(const Json& json);

// {"cost", "centers", "outliers", "trace"?}.
Json SolutionToJson(const Solution& solution);
absl::StatusOr<Solution> SolutionFromJson(const Json& json);

Json TraceToJson(const BranchTrace& trace);
absl::StatusOr<BranchTrace> TraceFromJson(const Json& json);

Json OracleToJson(const OracleClustering& clustering);
absl::StatusOr<OracleClustering> OracleFromJson(const Json& json);

// Pretty-printed text with a trailing newline.
std::string Dump(const Json& json);
absl::StatusOr<Json> ParseJson(std::string_view text);

}  // namespace fairkc

#endif  // FAIRKC_JSON_IO_H_
