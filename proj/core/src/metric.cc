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

#include "fairkc/metric.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace fairkc {

struct Metric::Storage {
  Kind kind = Kind::kMatrix;
  std::size_t n = 0;

  // kMatrix, and the kCoords cache once built. Row-major n x n.
  mutable std::vector<Length> table;

  // kCoords
  std::vector<std::vector<double>> coords;
  std::size_t cache_threshold = kDefaultCacheThreshold;
  mutable std::once_flag cache_once;
  mutable std::atomic<bool> cache_ready{false};

  // kAlias
  std::shared_ptr<const Storage> base;
  std::vector<PointId> origins;

  Length Euclidean(PointId u, PointId v) const {
    const auto& a = coords[u];
    const auto& b = coords[v];
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double diff = a[i] - b[i];
      sum += diff * diff;
    }
    return std::sqrt(sum);
  }

  void BuildCache() const {
    std::vector<Length> t(n * n, 0.0);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        t[u * n + v] = t[v * n + u] = Euclidean(u, v);
    table = std::move(t);
    cache_ready.store(true, std::memory_order_release);
  }

  Length Get(PointId u, PointId v) const {
    switch (kind) {
      case Kind::kMatrix:
        return table[static_cast<std::size_t>(u) * n + v];
      case Kind::kCoords:
        if (n > cache_threshold) return u == v ? 0.0 : Euclidean(u, v);
        if (!cache_ready.load(std::memory_order_acquire))
          std::call_once(cache_once, [this] { BuildCache(); });
        return table[static_cast<std::size_t>(u) * n + v];
      case Kind::kAlias:
        return base->Get(origins[u], origins[v]);
    }
    return 0.0;
  }
};

Metric::Metric() : storage_(std::make_shared<Storage>()) {}

Metric::Metric(std::shared_ptr<const Storage> storage)
    : storage_(std::move(storage)) {}

absl::StatusOr<Metric> Metric::FromMatrix(std::vector<std::vector<Length>> rows) {
  auto s = std::make_shared<Storage>();
  s->kind = Kind::kMatrix;
  s->n = rows.size();
  s->table.reserve(s->n * s->n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      return absl::InvalidArgumentError(
          absl::StrCat("distance matrix row ", i, " has ", rows[i].size(),
                       " entries, expected ", rows.size()));
    }
    for (Length d : rows[i]) {
      if (!std::isfinite(d))
        return absl::InvalidArgumentError(
            absl::StrCat("non-finite distance in row ", i));
      s->table.push_back(d);
    }
  }
  return Metric(std::move(s));
}

absl::StatusOr<Metric> Metric::FromCoords(std::vector<std::vector<double>> coords,
                                          std::size_t cache_threshold) {
  auto s = std::make_shared<Storage>();
  s->kind = Kind::kCoords;
  s->n = coords.size();
  s->cache_threshold = cache_threshold;
  const std::size_t dim = coords.empty() ? 0 : coords.front().size();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].size() != dim)
      return absl::InvalidArgumentError(absl::StrCat(
          "point ", i, " has dimension ", coords[i].size(), ", expected ", dim));
    for (double x : coords[i])
      if (!std::isfinite(x))
        return absl::InvalidArgumentError(
            absl::StrCat("non-finite coordinate on point ", i));
  }
  s->coords = std::move(coords);
  return Metric(std::move(s));
}

absl::StatusOr<Metric> Metric::Alias(const Metric& base,
                                     std::vector<PointId> origins) {
  for (PointId o : origins) {
    if (o < 0 || static_cast<std::size_t>(o) >= base.size())
      return absl::OutOfRangeError(
          absl::StrCat("alias origin ", o, " outside base metric of size ",
                       base.size()));
  }
  auto s = std::make_shared<Storage>();
  s->kind = Kind::kAlias;
  s->n = origins.size();
  // Collapse alias chains so lookups stay one level deep.
  if (base.kind() == Kind::kAlias) {
    for (PointId& o : origins) o = base.storage_->origins[o];
    s->base = base.storage_->base;
  } else {
    s->base = base.storage_;
  }
  s->origins = std::move(origins);
  return Metric(std::move(s));
}

std::size_t Metric::size() const { return storage_->n; }
Metric::Kind Metric::kind() const { return storage_->kind; }

Length Metric::operator()(PointId u, PointId v) const {
  return storage_->Get(u, v);
}

absl::StatusOr<Length> Metric::Distance(PointId u, PointId v) const {
  const auto n = static_cast<PointId>(size());
  if (u < 0 || v < 0 || u >= n || v >= n)
    return absl::OutOfRangeError(
        absl::StrCat("point pair (", u, ", ", v, ") outside metric of size ", n));
  return storage_->Get(u, v);
}

PointId Metric::Origin(PointId p) const {
  return storage_->kind == Kind::kAlias ? storage_->origins[p] : p;
}

const std::vector<std::vector<double>>& Metric::coords() const {
  return storage_->coords;
}

std::vector<std::vector<Length>> Metric::ToMatrix() const {
  const std::size_t n = size();
  std::vector<std::vector<Length>> rows(n, std::vector<Length>(n, 0.0));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) rows[u][v] = (*this)(u, v);
  return rows;
}

std::vector<PointId> Ball(const Metric& metric, PointId center, Length radius,
                          std::span<const PointId> candidates) {
  std::vector<PointId> out;
  for (PointId p : candidates)
    if (metric(p, center) <= radius) out.push_back(p);
  return out;
}

absl::StatusOr<std::vector<Length>> CandidateRadii(
    const Metric& metric, std::span<const PointId> facilities,
    std::span<const PointId> clients) {
  if (facilities.empty() || clients.empty())
    return absl::InvalidArgumentError(
        "candidate radii need at least one facility and one client");
  std::vector<Length> radii;
  radii.reserve(facilities.size() * clients.size() + 1);
  radii.push_back(0.0);
  for (PointId c : clients)
    for (PointId f : facilities) radii.push_back(metric(c, f));
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

std::string MetricViolation::ToString() const {
  switch (type) {
    case Type::kNegative:
      return absl::StrCat("negative distance at (", u, ", ", v, ")");
    case Type::kAsymmetric:
      return absl::StrCat("asymmetric distance at (", u, ", ", v, ")");
    case Type::kNonzeroDiagonal:
      return absl::StrCat("nonzero self-distance at ", u);
    case Type::kTriangle:
      return absl::StrCat("triangle inequality violated: d(", u, ", ", v,
                          ") > d(", u, ", ", w, ") + d(", w, ", ", v, ")");
  }
  return "unknown violation";
}

MetricReport VerifyMetric(const Metric& metric, std::size_t max_violations) {
  MetricReport report;
  const auto n = static_cast<PointId>(metric.size());
  auto add = [&](MetricViolation v) {
    if (report.violations.size() < max_violations) report.violations.push_back(v);
  };
  using Type = MetricViolation::Type;
  for (PointId u = 0; u < n; ++u) {
    if (metric(u, u) != 0.0) {
      report.zero_diagonal = false;
      add({Type::kNonzeroDiagonal, u, u});
    }
    for (PointId v = 0; v < n; ++v) {
      const Length d = metric(u, v);
      if (d < 0.0) {
        report.nonnegative = false;
        add({Type::kNegative, u, v});
      }
      if (u < v && d != metric(v, u)) {
        report.symmetric = false;
        add({Type::kAsymmetric, u, v});
      }
    }
  }
  for (PointId u = 0; u < n; ++u)
    for (PointId v = 0; v < n; ++v)
      for (PointId w = 0; w < n; ++w)
        if (metric(u, v) > metric(u, w) + metric(w, v)) {
          report.triangle = false;
          add({Type::kTriangle, u, v, w});
        }
  return report;
}

}  // namespace fairkc
