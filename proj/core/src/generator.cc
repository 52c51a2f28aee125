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

#include "fairkc/generator.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace fairkc {
namespace {

using Point = std::vector<double>;

absl::Status CheckSpec(const GenSpec& spec) {
  if (spec.k < 1) return absl::InvalidArgumentError("k must be positive");
  if (spec.z < 0) return absl::InvalidArgumentError("z must be nonnegative");
  if (spec.dim < 1) return absl::InvalidArgumentError("dimension must be positive");
  if (spec.sigma < 0.0 || spec.separation <= 0.0)
    return absl::InvalidArgumentError("need sigma >= 0 and separation > 0");
  const int strays = spec.outliers < 0 ? spec.z : spec.outliers;
  if (strays > spec.z)
    return absl::InvalidArgumentError(absl::StrCat(
        "planted outliers ", strays, " exceed the budget z = ", spec.z));
  if (spec.n - strays < spec.k)
    return absl::InvalidArgumentError(absl::StrCat(
        "n - outliers = ", spec.n - strays, " cannot fill k = ", spec.k,
        " planted clusters"));
  if (spec.groups < 1) return absl::InvalidArgumentError("need at least one group");
  if (spec.max_bound < 0) return absl::InvalidArgumentError("max_bound must be nonnegative");
  return absl::OkStatus();
}

class Sampler {
 public:
  explicit Sampler(const GenSpec& spec) : spec_(spec), rng_(spec.seed) {
    int seed_len = std::max(1, static_cast<int>(std::lround(spec.separation)));
    for (int c = 0; c < spec.k; ++c) {
      Point center(spec.dim, 0.0);
      center[0] = spec.matrix ? static_cast<double>(c) * seed_len
                              : c * spec.separation;
      centers_.push_back(std::move(center));
    }
  }

  // A point within sigma of planted center c (L2 in coordinate mode, L1 on
  // the integer grid in matrix mode).
  Point Near(int c) {
    Point p = centers_[c];
    if (spec_.matrix) {
      const int reach = static_cast<int>(std::floor(spec_.sigma / spec_.dim));
      std::uniform_int_distribution<int> offset(-reach, reach);
      for (double& x : p) x += offset(rng_);
    } else {
      const double reach = spec_.sigma / std::sqrt(static_cast<double>(spec_.dim));
      std::uniform_real_distribution<double> offset(-reach, reach);
      for (double& x : p) x += offset(rng_);
    }
    return p;
  }

  // Stray j sits displacement * (j + 1) away from its anchor along an axis
  // the planted centers do not use (axis 0 past the last center in 1-D).
  Point Stray(int j) const {
    const double d = spec_.displacement > 0.0 ? spec_.displacement
                                              : 5.0 * spec_.separation;
    const double step = spec_.matrix ? std::max(1.0, std::round(d)) : d;
    if (spec_.dim == 1) {
      Point p = centers_.back();
      p[0] += step * (j + 1);
      return p;
    }
    Point p = centers_[j % spec_.k];
    p[1] += step * (j + 1);
    return p;
  }

  const Point& Center(int c) const { return centers_[c]; }
  std::mt19937_64& rng() { return rng_; }

 private:
  const GenSpec& spec_;
  std::mt19937_64 rng_;
  std::vector<Point> centers_;
};

// Labels for `count` items; every label in [0, groups) is used at least once.
absl::StatusOr<std::vector<int>> Labels(std::mt19937_64& rng, int count,
                                        int groups, GenSpec::GroupScheme scheme) {
  if (count < groups)
    return absl::InvalidArgumentError(absl::StrCat(
        count, " points cannot populate ", groups, " nonempty groups"));
  std::vector<int> label(count);
  std::uniform_int_distribution<int> uniform(0, groups - 1);
  std::geometric_distribution<int> geometric(0.5);
  for (int i = 0; i < count; ++i) {
    if (i < groups) {
      label[i] = i;
    } else if (scheme == GenSpec::GroupScheme::kSkewed) {
      label[i] = std::min(groups - 1, geometric(rng));
    } else if (scheme == GenSpec::GroupScheme::kForbidden) {
      // Group 0 holds the forbidden centers, roughly a third of the points.
      std::bernoulli_distribution forbidden(1.0 / 3.0);
      std::uniform_int_distribution<int> rest(1, groups - 1);
      label[i] = forbidden(rng) ? 0 : rest(rng);
    } else {
      label[i] = uniform(rng);
    }
  }
  std::shuffle(label.begin(), label.end(), rng);
  return label;
}

std::vector<std::vector<PointId>> Partition(const std::vector<int>& label,
                                            const std::vector<PointId>& ids,
                                            int groups) {
  std::vector<std::vector<PointId>> out(groups);
  for (std::size_t i = 0; i < ids.size(); ++i) out[label[i]].push_back(ids[i]);
  return out;
}

// Random upper bounds in [0, min(cap, |G_i|)] raised until they sum to k.
absl::StatusOr<std::vector<int>> UpperBounds(
    std::mt19937_64& rng, const std::vector<std::vector<PointId>>& groups,
    int k, int cap, bool forbidden) {
  std::vector<int> room(groups.size()), bound(groups.size(), 0);
  for (std::size_t g = 0; g < groups.size(); ++g)
    room[g] = std::min<int>(cap, groups[g].size());
  if (forbidden) room[0] = 0;
  if (std::accumulate(room.begin(), room.end(), 0) < k)
    return absl::InvalidArgumentError(absl::StrCat(
        "group sizes and max_bound cannot reach k = ", k));
  for (std::size_t g = 0; g < groups.size(); ++g)
    bound[g] = std::uniform_int_distribution<int>(0, room[g])(rng);
  while (std::accumulate(bound.begin(), bound.end(), 0) < k) {
    std::vector<std::size_t> open;
    for (std::size_t g = 0; g < groups.size(); ++g)
      if (bound[g] < room[g]) open.push_back(g);
    ++bound[open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)]];
  }
  return bound;
}

Metric Build(const GenSpec& spec, const std::vector<Point>& points) {
  if (!spec.matrix) return *Metric::FromCoords(points);
  std::vector<std::vector<Length>> rows(points.size(),
                                        std::vector<Length>(points.size()));
  for (std::size_t u = 0; u < points.size(); ++u)
    for (std::size_t v = 0; v < points.size(); ++v) {
      Length d = 0.0;
      for (int a = 0; a < spec.dim; ++a) d += std::abs(points[u][a] - points[v][a]);
      rows[u][v] = d;
    }
  return *Metric::FromMatrix(rows);
}

}  // namespace

absl::StatusOr<AnyInstance> Generate(const GenSpec& spec) {
  if (absl::Status s = CheckSpec(spec); !s.ok()) return s;
  Sampler sampler(spec);
  std::mt19937_64& rng = sampler.rng();
  const int strays = spec.outliers < 0 ? spec.z : spec.outliers;

  // Clients: cluster c's first member is the planted center itself.
  std::vector<Point> points;
  std::uniform_int_distribution<int> cluster(0, spec.k - 1);
  for (int i = 0; i < spec.n - strays; ++i)
    points.push_back(i < spec.k ? sampler.Center(i) : sampler.Near(cluster(rng)));
  for (int j = 0; j < strays; ++j) points.push_back(sampler.Stray(j));
  std::shuffle(points.begin(), points.end(), rng);

  const bool supplier = spec.problem == GenSpec::Problem::kFairSupplier ||
                        spec.problem == GenSpec::Problem::kColorful;
  if (!supplier) {
    const int cap = spec.max_bound == 0 ? spec.k : std::min(spec.max_bound, spec.k);
    const bool forbidden = spec.scheme == GenSpec::GroupScheme::kForbidden;
    if (forbidden && spec.groups < 2)
      return absl::InvalidArgumentError("forbidden-gadget scheme needs >= 2 groups");
    auto label = Labels(rng, spec.n, spec.groups, spec.scheme);
    if (!label.ok()) return label.status();
    std::vector<PointId> ids(spec.n);
    std::iota(ids.begin(), ids.end(), 0);
    auto groups = Partition(*label, ids, spec.groups);
    auto upper = UpperBounds(rng, groups, spec.k, cap, forbidden);
    if (!upper.ok()) return upper.status();
    Metric metric = Build(spec, points);
    if (spec.problem == GenSpec::Problem::kFairKCenter)
      return FairKCenterInstance{metric, spec.k, spec.z, std::move(groups),
                                 std::move(*upper)};
    // Lower bounds: random in [0, u_i], then lowered until they sum to <= k.
    std::vector<int> lower(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g)
      lower[g] = std::uniform_int_distribution<int>(0, (*upper)[g])(rng);
    while (std::accumulate(lower.begin(), lower.end(), 0) > spec.k) {
      std::vector<std::size_t> positive;
      for (std::size_t g = 0; g < lower.size(); ++g)
        if (lower[g] > 0) positive.push_back(g);
      --lower[positive[std::uniform_int_distribution<std::size_t>(
          0, positive.size() - 1)(rng)]];
    }
    return FairRangeInstance{metric, spec.k, spec.z, std::move(groups),
                             std::move(lower), std::move(*upper)};
  }

  if (spec.scheme == GenSpec::GroupScheme::kForbidden)
    return absl::InvalidArgumentError(
        "forbidden-gadget scheme needs upper bounds; supplier variants have none");
  const bool colorful = spec.problem == GenSpec::Problem::kColorful;
  const int classes = colorful ? spec.k : spec.groups;
  if (!colorful && classes < spec.k)
    return absl::InvalidArgumentError(absl::StrCat(
        spec.groups, " unit groups cannot host k = ", spec.k, " centers"));
  const int m = spec.facilities > 0 ? spec.facilities
                                    : std::max({spec.n / 2, spec.k, classes});
  std::vector<Point> facility_points;
  for (int f = 0; f < m; ++f)
    facility_points.push_back(f < spec.k ? sampler.Near(f) : sampler.Near(cluster(rng)));
  auto label = Labels(rng, m, classes, spec.scheme);
  if (!label.ok()) return label.status();
  std::vector<PointId> clients(spec.n), facilities(m);
  std::iota(clients.begin(), clients.end(), 0);
  std::iota(facilities.begin(), facilities.end(), spec.n);
  points.insert(points.end(), facility_points.begin(), facility_points.end());
  Metric metric = Build(spec, points);
  auto parts = Partition(*label, facilities, classes);
  if (colorful)
    return ColorfulInstance{metric, std::move(facilities), std::move(clients),
                            spec.k, spec.z, std::move(parts)};
  return FairSupplierInstance{metric, std::move(facilities), std::move(clients),
                              spec.k, spec.z, std::move(parts)};
}

}  // namespace fairkc
