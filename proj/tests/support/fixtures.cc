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

#include "support/fixtures.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fairkc::testing {

Metric LineMetric(const std::vector<double>& positions) {
  std::vector<std::vector<double>> coords;
  for (double x : positions) coords.push_back({x});
  return *Metric::FromCoords(coords);
}

Metric RandomGridMetric(std::mt19937_64& rng, int n, int span) {
  std::uniform_int_distribution<int> coord(0, span - 1);
  std::vector<std::pair<int, int>> pts(n);
  for (auto& [x, y] : pts) {
    x = coord(rng);
    y = coord(rng);
  }
  std::vector<std::vector<Length>> rows(n, std::vector<Length>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      rows[u][v] = std::abs(pts[u].first - pts[v].first) +
                   std::abs(pts[u].second - pts[v].second);
  return *Metric::FromMatrix(rows);
}

std::vector<std::vector<PointId>> RandomPartition(std::mt19937_64& rng,
                                                  const std::vector<PointId>& ids,
                                                  int groups) {
  std::vector<int> label(ids.size());
  std::uniform_int_distribution<int> pick(0, groups - 1);
  for (std::size_t i = 0; i < ids.size(); ++i)
    label[i] = i < static_cast<std::size_t>(groups) ? static_cast<int>(i) : pick(rng);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<std::vector<PointId>> out(groups);
  for (std::size_t i = 0; i < ids.size(); ++i) out[label[i]].push_back(ids[i]);
  return out;
}

FairKCenterInstance RandomFair(uint64_t seed, int n, int k, int z, int groups) {
  std::mt19937_64 rng(seed);
  FairKCenterInstance in;
  in.metric = RandomGridMetric(rng, n, 20);
  in.k = k;
  in.z = z;
  std::vector<PointId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  in.groups = RandomPartition(rng, ids, groups);
  in.upper_bounds.assign(groups, 0);
  for (int& b : in.upper_bounds) b = std::uniform_int_distribution<int>(0, k)(rng);
  while (std::accumulate(in.upper_bounds.begin(), in.upper_bounds.end(), 0) < k)
    ++in.upper_bounds[std::uniform_int_distribution<int>(0, groups - 1)(rng)];
  for (int& b : in.upper_bounds) b = std::min(b, k);
  return in;
}

FairRangeInstance RandomFairRange(uint64_t seed, int n, int k, int z, int groups) {
  std::mt19937_64 rng(seed);
  FairRangeInstance in;
  in.metric = RandomGridMetric(rng, n, 20);
  in.k = k;
  in.z = z;
  std::vector<PointId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  in.groups = RandomPartition(rng, ids, groups);
  in.upper_bounds.assign(groups, 0);
  in.lower_bounds.assign(groups, 0);
  for (int g = 0; g < groups; ++g) {
    const int room = std::min<int>(k, in.groups[g].size());
    in.upper_bounds[g] = std::uniform_int_distribution<int>(0, room)(rng);
  }
  while (std::accumulate(in.upper_bounds.begin(), in.upper_bounds.end(), 0) < k) {
    const int g = std::uniform_int_distribution<int>(0, groups - 1)(rng);
    if (in.upper_bounds[g] < std::min<int>(k, in.groups[g].size())) ++in.upper_bounds[g];
  }
  for (int g = 0; g < groups; ++g)
    in.lower_bounds[g] = std::uniform_int_distribution<int>(0, in.upper_bounds[g])(rng);
  while (std::accumulate(in.lower_bounds.begin(), in.lower_bounds.end(), 0) > k) {
    const int g = std::uniform_int_distribution<int>(0, groups - 1)(rng);
    if (in.lower_bounds[g] > 0) --in.lower_bounds[g];
  }
  return in;
}

ColorfulInstance RandomColorful(uint64_t seed, int clients, int facilities, int k,
                                int z) {
  std::mt19937_64 rng(seed);
  ColorfulInstance in;
  in.metric = RandomGridMetric(rng, clients + facilities, 20);
  in.k = k;
  in.z = z;
  for (int c = 0; c < clients; ++c) in.clients.push_back(c);
  for (int f = 0; f < facilities; ++f) in.facilities.push_back(clients + f);
  in.classes = RandomPartition(rng, in.facilities, k);
  return in;
}

ColorfulInstance LightPairGadget(double rotation, double scale) {
  const double pi = std::acos(-1.0);
  const double ox = 100.0;  // optimal class-1 center at (ox, 0)
  std::vector<std::vector<double>> pts;
  auto add = [&](double x, double y) {
    const double c = std::cos(rotation), s = std::sin(rotation);
    pts.push_back({scale * (c * x - s * y), scale * (s * x + c * y)});
    return static_cast<PointId>(pts.size() - 1);
  };
  ColorfulInstance in;
  in.k = 2;
  in.z = 56;
  for (int i = 0; i < 8; ++i) in.clients.push_back(add(0, 0));
  for (int b = 0; b < 8; ++b) {
    const double t = 2 * pi * b / 8;
    in.clients.push_back(add(ox + std::cos(t), std::sin(t)));
  }
  for (int b = 0; b < 8; ++b) {
    const double t = 2 * pi * b / 8;
    for (int o = 0; o < 7; ++o) {
      const double phi = t + (o - 3) * (40.0 / 3) * pi / 180;
      in.clients.push_back(add(ox + 1.9 * std::cos(t) + 0.9 * std::cos(phi),
                               1.9 * std::sin(t) + 0.9 * std::sin(phi)));
    }
  }
  in.classes.assign(2, {});
  for (int b = 0; b < 8; ++b) {
    const double t = 2 * pi * b / 8;
    in.classes[0].push_back(add(ox + 1.9 * std::cos(t), 1.9 * std::sin(t)));
  }
  in.classes[0].push_back(add(0, 0));  // largest id, so it loses density ties
  in.classes[1].push_back(add(ox, 0));
  in.facilities = in.classes[0];
  in.facilities.push_back(in.classes[1][0]);
  in.metric = *Metric::FromCoords(pts);
  return in;
}

std::vector<PointId> RandomFeasibleCenters(std::mt19937_64& rng,
                                           const FairKCenterInstance& in) {
  std::vector<PointId> pool;
  for (std::size_t g = 0; g < in.groups.size(); ++g) {
    std::vector<PointId> members = in.groups[g];
    std::shuffle(members.begin(), members.end(), rng);
    const std::size_t take = std::min<std::size_t>(in.upper_bounds[g], members.size());
    pool.insert(pool.end(), members.begin(), members.begin() + take);
  }
  std::shuffle(pool.begin(), pool.end(), rng);
  const int size = std::uniform_int_distribution<int>(
      1, std::min<int>(in.k, pool.size()))(rng);
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace fairkc::testing
