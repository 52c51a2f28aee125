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

#include "fairkc/solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <unordered_set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace fairkc {

SearchContext::SearchContext(const ColorfulInstance& instance, Length radius)
    : instance_(&instance), radius_(radius) {
  const std::size_t clients = instance.clients.size();
  const auto z = static_cast<std::size_t>(std::max(instance.z, 0));
  required_ = clients > z ? clients - z : 0;
  slot_of_.assign(instance.metric.size(), -1);
  class_slots_.resize(instance.classes.size());
  const Length triple = 3.0 * radius;
  for (std::size_t c = 0; c < instance.classes.size(); ++c) {
    std::vector<PointId> members = instance.classes[c];
    std::sort(members.begin(), members.end());
    for (PointId f : members) {
      const int slot = static_cast<int>(facility_.size());
      facility_.push_back(f);
      color_.push_back(static_cast<int>(c));
      slot_of_[f] = slot;
      class_slots_[c].push_back(slot);
      ClientSet near(clients), far(clients);
      for (std::size_t i = 0; i < clients; ++i) {
        const Length d = instance.metric(instance.clients[i], f);
        if (d <= radius) near.Insert(i);
        if (d <= triple) far.Insert(i);
      }
      within_r_.push_back(std::move(near));
      within_3r_.push_back(std::move(far));
    }
  }
  const Length double_r = 2.0 * radius;
  within_2r_.assign(facility_.size(), ClientSet(facility_.size()));
  for (std::size_t u = 0; u < facility_.size(); ++u) {
    within_2r_[u].Insert(u);
    for (std::size_t v = u + 1; v < facility_.size(); ++v) {
      if (instance.metric(facility_[u], facility_[v]) <= double_r) {
        within_2r_[u].Insert(v);
        within_2r_[v].Insert(u);
      }
    }
  }
}

SolverState SolverState::Initial(const SearchContext& context) {
  SolverState state;
  state.remaining = ClientSet(context.client_count(), true);
  return state;
}

std::vector<BallRecord> SettleBalls(const SearchContext& context,
                                    const SolverState& state, int color) {
  const std::size_t cap = 4 * static_cast<std::size_t>(context.k());
  std::vector<int> available = context.class_slots(color);
  ClientSet working = state.remaining;
  std::vector<BallRecord> balls;
  while (!available.empty() && balls.size() < cap) {
    std::size_t best = 0;
    std::size_t best_size = 0;
    for (std::size_t i = 0; i < available.size(); ++i) {
      const std::size_t size =
          context.WithinRadius(available[i]).IntersectCount(working);
      // Slots are sorted by point id, so strict > keeps the smallest id.
      if (i == 0 || size > best_size) {
        best = i;
        best_size = size;
      }
    }
    const int slot = available[best];
    BallRecord ball;
    ball.center = context.facility(slot);
    ball.color = color;
    ball.covered = context.WithinRadius(slot).Intersect(working);
    ball.size = best_size;
    working.Subtract(ball.covered);
    available.erase(available.begin() + static_cast<std::ptrdiff_t>(best));
    balls.push_back(std::move(ball));
  }
  return balls;
}

std::optional<PointId> SelectHardPickCenter(const SearchContext& context,
                                            std::span<const std::size_t> gain,
                                            const BallRecord& a,
                                            const BallRecord& b,
                                            int target_color) {
  const ClientSet& near_a = context.NearbyFacilities(context.SlotOf(a.center));
  const ClientSet& near_b = context.NearbyFacilities(context.SlotOf(b.center));
  std::optional<PointId> best;
  std::size_t best_gain = 0;
  for (int slot : context.class_slots(target_color)) {
    if (!near_a.Contains(slot) || !near_b.Contains(slot)) continue;
    if (!best || gain[slot] > best_gain) {
      best = context.facility(slot);
      best_gain = gain[slot];
    }
  }
  return best;
}

std::optional<PointId> SelectHardPickCenter(const SearchContext& context,
                                            const SolverState& state,
                                            const BallRecord& a,
                                            const BallRecord& b,
                                            int target_color) {
  std::vector<std::size_t> gain(context.facility_count(), 0);
  for (int slot : context.class_slots(target_color))
    gain[slot] = context.WithinTripleRadius(slot).IntersectCount(state.remaining);
  return SelectHardPickCenter(context, gain, a, b, target_color);
}

ClientSet Expansion(const SearchContext& context, const SolverState& state,
                    PointId facility) {
  return context.WithinTripleRadius(context.SlotOf(facility))
      .Intersect(state.remaining);
}

uint64_t NodeCap(int k) {
  const double kk = k;
  const double per_call = 4.0 * kk + (4.0 * kk) * (4.0 * kk - 1.0) / 2.0 * kk;
  const double cap = std::pow(kk * per_call, kk);
  if (cap >= static_cast<double>(std::numeric_limits<uint64_t>::max()))
    return std::numeric_limits<uint64_t>::max();
  return static_cast<uint64_t>(cap);
}

namespace {

struct StateKeyHash {
  std::size_t operator()(const std::vector<uint64_t>& key) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (uint64_t w : key) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// False when every completion of `state` provably covers fewer than
// |C| - z clients. Requires `gain` for all unmarked slots.
bool MarginalBoundReaches(const SearchContext& context, const SolverState& state,
                          const std::vector<std::size_t>& gain,
                          std::size_t covered) {
  const std::size_t required = context.required_coverage();
  if (covered >= required) return true;
  const std::size_t need = required - covered;
  int pivot = -1;
  std::vector<int> others;
  for (int c = 0; c < context.k(); ++c) {
    if (state.IsMarked(c)) continue;
    others.push_back(c);
    if (pivot < 0 ||
        context.class_slots(c).size() < context.class_slots(pivot).size())
      pivot = c;
  }
  if (others.size() < 2) return true;
  others.erase(std::find(others.begin(), others.end(), pivot));
  std::size_t others_best = 0;
  for (int c : others) {
    std::size_t best = 0;
    for (int slot : context.class_slots(c)) best = std::max(best, gain[slot]);
    others_best += best;
  }
  for (int f : context.class_slots(pivot)) {
    if (gain[f] + others_best < need) continue;
    ClientSet rest = state.remaining;
    rest.Subtract(context.WithinTripleRadius(f));
    std::size_t total = gain[f];
    for (int c : others) {
      std::size_t best = 0;
      for (int slot : context.class_slots(c))
        best = std::max(best, context.WithinTripleRadius(slot).IntersectCount(rest));
      total += best;
    }
    if (total >= need) return true;
  }
  return false;
}

class BranchSearch {
 public:
  BranchSearch(const SearchContext& context, const SearchLimits& limits)
      : context_(context),
        limits_(limits),
        start_(std::chrono::steady_clock::now()) {}

  BranchOutcome Run() {
    BranchOutcome outcome;
    SolverState root = SolverState::Initial(context_);
    const bool found = Search(root, 0);
    stats_.radii_tried = 1;
    stats_.max_nodes_per_radius = stats_.nodes;
    outcome.stats = stats_;
    if (found) {
      outcome.status = BranchOutcome::Status::kFound;
      outcome.solution = BuildSolution();
    } else if (abort_ != BranchOutcome::Status::kExhausted) {
      outcome.status = abort_;
    }
    return outcome;
  }

 private:
  bool Search(const SolverState& state, int depth) {
    const int k = context_.k();
    const std::size_t covered =
        context_.client_count() - state.remaining.Count();
    if (depth == k) return covered >= context_.required_coverage();

    // 3r coverage of the remaining clients, per facility of an unmarked color.
    std::vector<std::size_t> gain(context_.facility_count(), 0);
    std::size_t bound = covered;
    for (int c = 0; c < k; ++c) {
      if (state.IsMarked(c)) continue;
      std::size_t best = 0;
      for (int slot : context_.class_slots(c)) {
        gain[slot] = context_.WithinTripleRadius(slot).IntersectCount(state.remaining);
        best = std::max(best, gain[slot]);
      }
      bound += best;
    }
    if (limits_.coverage_bound && bound < context_.required_coverage()) {
      ++stats_.bound_prunes;
      return false;
    }
    if (limits_.marginal_bound && !MarginalBoundReaches(context_, state, gain, covered)) {
      ++stats_.bound_prunes;
      return false;
    }

    std::vector<uint64_t> key;
    if (limits_.memoize_failures) {
      key = state.remaining.words();
      key.push_back(state.marked);
      if (failed_.contains(key)) {
        ++stats_.memo_hits;
        return false;
      }
    }

    // A slot fixes the color it marks, so equal slots mean equal children;
    // a child that already failed here is not re-entered.
    ClientSet tried(context_.facility_count());
    const std::size_t ball_cap = 4 * static_cast<std::size_t>(k);
    for (int j = 0; j < k; ++j) {
      if (state.IsMarked(j)) continue;
      std::vector<BallRecord> balls = SettleBalls(context_, state, j);
      ++stats_.settle_calls;
      stats_.max_balls_per_call =
          std::max<uint64_t>(stats_.max_balls_per_call, balls.size());
      if (balls.size() > std::min(context_.class_slots(j).size(), ball_cap))
        ++stats_.ball_cap_violations;
      std::vector<PointId> centers;
      for (const auto& b : balls) centers.push_back(b.center);

      for (std::size_t b = 0; b < balls.size(); ++b) {
        TraceStep step;
        step.build_color = j;
        step.decision = TraceStep::Decision::kEasy;
        step.ball_centers = centers;
        step.ball_index = static_cast<int>(b);
        if (!FirstVisit(tried, balls[b].center)) continue;
        if (Commit(state, depth, j, balls[b].center, std::move(step))) return true;
        if (aborted()) return false;
      }
      for (std::size_t a = 0; a < balls.size(); ++a) {
        for (std::size_t b = a + 1; b < balls.size(); ++b) {
          for (int target = 0; target < k; ++target) {
            if (state.IsMarked(target)) continue;
            const std::optional<PointId> t =
                SelectHardPickCenter(context_, gain, balls[a], balls[b], target);
            if (!t) {
              ++stats_.hard_picks_without_center;
              continue;
            }
            if (!FirstVisit(tried, *t)) continue;
            const ClientSet expansion = Expansion(context_, state, *t);
            if (!balls[a].covered.Union(balls[b].covered).IsSubsetOf(expansion))
              ++stats_.geometry_violations;
            TraceStep step;
            step.build_color = j;
            step.decision = TraceStep::Decision::kHard;
            step.ball_centers = centers;
            step.ball_a = static_cast<int>(a);
            step.ball_b = static_cast<int>(b);
            if (Commit(state, depth, target, *t, std::move(step))) return true;
            if (aborted()) return false;
          }
        }
      }
    }

    if (limits_.memoize_failures && failed_.size() < limits_.memo_capacity)
      failed_.insert(std::move(key));
    return false;
  }

  bool Commit(const SolverState& state, int depth, int color, PointId facility,
              TraceStep step) {
    if (++stats_.nodes > limits_.max_nodes) {
      abort_ = BranchOutcome::Status::kNodeLimit;
      return false;
    }
    if (limits_.time_budget && (stats_.nodes & 1023) == 0 &&
        std::chrono::steady_clock::now() - start_ > *limits_.time_budget) {
      abort_ = BranchOutcome::Status::kTimeLimit;
      return false;
    }
    SolverState child = state;
    const ClientSet expansion = Expansion(context_, state, facility);
    child.remaining.Subtract(expansion);
    child.marked |= uint64_t{1} << color;
    child.committed.emplace_back(color, facility);
    step.iteration = depth;
    step.committed = facility;
    step.marked = color;
    step.covered_new = static_cast<int>(expansion.Count());
    path_.push_back(std::move(step));
    if (Search(child, depth + 1)) {
      if (committed_.empty()) committed_ = child.committed;
      return true;
    }
    path_.pop_back();
    return false;
  }

  bool FirstVisit(ClientSet& tried, PointId facility) {
    const int slot = context_.SlotOf(facility);
    if (tried.Contains(slot)) {
      ++stats_.memo_hits;
      return false;
    }
    tried.Insert(slot);
    return true;
  }

  bool aborted() const { return abort_ != BranchOutcome::Status::kExhausted; }

  Solution BuildSolution() const {
    std::vector<std::pair<int, PointId>> picks = committed_;
    std::sort(picks.begin(), picks.end());
    Solution solution;
    for (const auto& [color, f] : picks) {
      solution.centers.push_back(f);
      solution.center_groups.push_back(color);
    }
    const ColorfulInstance& in = context_.instance();
    CostResult cost = EvaluateCost(in.metric, in.clients, solution.centers, in.z);
    solution.cost = cost.cost;
    solution.outliers = std::move(cost.outliers);
    BranchTrace trace;
    trace.radius = context_.radius();
    trace.steps = path_;
    trace.stats = stats_;
    solution.trace = std::move(trace);
    return solution;
  }

  const SearchContext& context_;
  const SearchLimits& limits_;
  std::chrono::steady_clock::time_point start_;
  SearchStats stats_;
  BranchOutcome::Status abort_ = BranchOutcome::Status::kExhausted;
  std::unordered_set<std::vector<uint64_t>, StateKeyHash> failed_;
  std::vector<TraceStep> path_;
  std::vector<std::pair<int, PointId>> committed_;
};

}  // namespace

BranchOutcome BranchSolve(const SearchContext& context, const SearchLimits& limits) {
  if (context.k() < 1 || context.k() > 63) return {};
  return BranchSearch(context, limits).Run();
}

BranchOutcome BranchSolve(const ColorfulInstance& instance, Length radius,
                          const SearchLimits& limits) {
  const SearchContext context(instance, radius);
  return BranchSolve(context, limits);
}

bool PassesRootCoverageBound(const ColorfulInstance& instance, Length radius) {
  const std::size_t clients = instance.clients.size();
  const auto z = static_cast<std::size_t>(std::max(instance.z, 0));
  const std::size_t required = clients > z ? clients - z : 0;
  const Length triple = 3.0 * radius;
  std::size_t bound = 0;
  for (const auto& cls : instance.classes) {
    std::size_t best = 0;
    for (PointId f : cls) {
      std::size_t count = 0;
      for (PointId c : instance.clients)
        if (instance.metric(c, f) <= triple) ++count;
      best = std::max(best, count);
    }
    bound += best;
    if (bound >= required) return true;
  }
  return bound >= required;
}

bool PassesRootMarginalBound(const ColorfulInstance& instance, Length radius) {
  const SearchContext context(instance, radius);
  const SolverState root = SolverState::Initial(context);
  std::vector<std::size_t> gain(context.facility_count(), 0);
  for (int slot = 0; slot < static_cast<int>(gain.size()); ++slot)
    gain[slot] = context.WithinTripleRadius(slot).IntersectCount(root.remaining);
  return MarginalBoundReaches(context, root, gain, 0);
}

namespace {

// Relabels colors in first-occurrence order.
std::vector<int> CanonicalForm(const std::vector<int>& color_of_group) {
  std::vector<int> relabel, out;
  int next = 0;
  for (int c : color_of_group) {
    if (c >= static_cast<int>(relabel.size())) relabel.resize(c + 1, -1);
    if (relabel[c] < 0) relabel[c] = next++;
    out.push_back(relabel[c]);
  }
  return out;
}

absl::Status LimitError(const BranchOutcome& outcome, Length radius) {
  const std::string detail =
      absl::StrCat(" at radius ", radius, " after ", outcome.stats.nodes,
                   " nodes (", outcome.stats.settle_calls, " settle calls, ",
                   outcome.stats.memo_hits, " memo hits)");
  if (outcome.status == BranchOutcome::Status::kTimeLimit)
    return absl::DeadlineExceededError(absl::StrCat("time budget exceeded", detail));
  return absl::ResourceExhaustedError(absl::StrCat("node limit exceeded", detail));
}

}  // namespace

absl::StatusOr<ColorfulResult> SolveColorful(const ColorfulInstance& instance,
                                             const ColorfulOptions& options) {
  const ValidationReport report = Validate(instance);
  if (!report.ok()) return absl::InvalidArgumentError(report.ToString());
  if (instance.k > 63)
    return absl::InvalidArgumentError("k above 63 is not supported");
  auto radii_or =
      CandidateRadii(instance.metric, instance.facilities, instance.clients);
  if (!radii_or.ok()) return radii_or.status();
  const std::vector<Length>& radii = *radii_or;

  std::size_t lo = 0;
  if (options.skip_by_root_bound) {
    std::size_t hi = radii.size() - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (PassesRootCoverageBound(instance, radii[mid]) &&
          PassesRootMarginalBound(instance, radii[mid]))
        hi = mid;
      else
        lo = mid + 1;
    }
  }

  ColorfulResult result;
  // Runs one radius; nullopt means "no success there", errors propagate.
  auto attempt = [&](std::size_t i) -> absl::StatusOr<std::optional<Solution>> {
    const SearchContext context(instance, radii[i]);
    BranchOutcome outcome = BranchSolve(context, options.limits);
    result.stats += outcome.stats;
    switch (outcome.status) {
      case BranchOutcome::Status::kFound:
        return std::move(outcome.solution);
      case BranchOutcome::Status::kExhausted:
        return std::optional<Solution>();
      default:
        return LimitError(outcome, radii[i]);
    }
  };
  auto finish = [&](std::size_t i, Solution solution) {
    result.radius = radii[i];
    solution.trace->stats = result.stats;
    result.solution = std::move(solution);
    return result;
  };

  if (options.radius_mode == RadiusMode::kScan) {
    for (std::size_t i = lo; i < radii.size(); ++i) {
      if (options.stop_at && radii[i] >= *options.stop_at) return result;
      auto found = attempt(i);
      if (!found.ok()) return found.status();
      if (*found) return finish(i, **std::move(found));
    }
    return absl::InternalError(
        "no candidate radius admits a covering branch; the instance violates "
        "the metric assumptions");
  }

  // Binary mode assumes success is monotone in the radius, then re-checks a
  // window of radii below the one it settles on.
  std::size_t hi = radii.size() - 1;
  if (options.stop_at) {
    while (hi > lo && radii[hi] >= *options.stop_at) --hi;
    if (radii[hi] >= *options.stop_at) return result;
  }
  std::optional<std::pair<std::size_t, Solution>> best;
  std::size_t left = lo, right = hi + 1;
  while (left < right) {
    const std::size_t mid = left + (right - left) / 2;
    auto found = attempt(mid);
    if (!found.ok()) return found.status();
    if (*found) {
      best.emplace(mid, **std::move(found));
      right = mid;
    } else {
      left = mid + 1;
    }
  }
  if (!best) {
    if (options.stop_at) return result;
    return absl::InternalError("no candidate radius admits a covering branch");
  }
  bool improved = true;
  while (improved) {
    improved = false;
    const std::size_t top = best->first;
    const std::size_t floor =
        top >= lo + options.verify_window ? top - options.verify_window : lo;
    for (std::size_t i = floor; i < top; ++i) {
      auto found = attempt(i);
      if (!found.ok()) return found.status();
      if (*found) {
        best.emplace(i, **std::move(found));
        improved = true;
        break;
      }
    }
  }
  return finish(best->first, std::move(best->second));
}

namespace {

bool BetterSolution(const Solution& a, const Solution& b) {
  if (a.cost != b.cost) return a.cost < b.cost;
  return a.centers < b.centers;
}

ColoringProvenance Provenance(const Coloring& coloring, const std::string& mode) {
  ColoringProvenance p;
  p.mode = mode;
  p.seed = coloring.seed;
  p.enumeration_index = coloring.enumeration_index;
  p.assignment = coloring.color_of_group;
  return p;
}

}  // namespace

absl::StatusOr<PipelineReport> SolvePipeline(const AnyInstance& instance,
                                             const PipelineOptions& options) {
  const ValidationReport report = Validate(instance);
  if (!report.ok()) return absl::InvalidArgumentError(report.ToString());

  PipelineReport out;
  if (const auto* colorful = std::get_if<ColorfulInstance>(&instance)) {
    out.coloring_mode = "given";
    auto solved = SolveColorful(*colorful, options.colorful);
    if (!solved.ok()) return solved.status();
    out.stats = solved->stats;
    out.colorings_total = out.colorings_solved = 1;
    out.solution = std::move(solved->solution);
    return out;
  }

  absl::StatusOr<UnitReduction> reduction = absl::InternalError("unreachable");
  if (const auto* fair = std::get_if<FairKCenterInstance>(&instance))
    reduction = FairToUnitSupplier(*fair);
  else if (const auto* range = std::get_if<FairRangeInstance>(&instance))
    reduction = FairRangeToUnitSupplier(*range);
  else
    reduction = IdentityReduction(std::get<FairSupplierInstance>(instance));
  if (!reduction.ok()) return reduction.status();
  const FairSupplierInstance& unit = reduction->instance;
  const int k = unit.k;

  ColoringMode mode = options.coloring_mode;
  if (mode == ColoringMode::kAuto)
    mode = ColoringCount(k, unit.groups.size()) <= options.enumeration_cap
               ? ColoringMode::kExhaustive
               : ColoringMode::kRandom;
  out.coloring_mode = mode == ColoringMode::kExhaustive ? "exhaustive" : "random";

  // Smallest radius at which an accepted coloring succeeded.
  std::optional<Length> best_radius;
  // Solves one coloring and folds it into `out`.
  auto process = [&](uint64_t index, ColoredInstance colored) -> absl::Status {
    TrialRecord record;
    record.index = index;
    record.coloring = colored.coloring;
    ++out.colorings_total;
    if (colored.has_empty_class) {
      record.outcome = TrialRecord::Outcome::kEmptyClass;
      ++out.empty_class_discards;
      out.trials.push_back(std::move(record));
      return absl::OkStatus();
    }
    ColorfulOptions colorful = options.colorful;
    if (options.prune_by_incumbent && best_radius) {
      colorful.stop_at = colorful.stop_at ? std::min(*colorful.stop_at, *best_radius)
                                          : *best_radius;
    }
    auto solved = SolveColorful(colored.instance, colorful);
    if (!solved.ok()) return solved.status();
    out.stats += solved->stats;
    record.nodes = solved->stats.nodes;
    if (!solved->solution) {
      record.outcome = TrialRecord::Outcome::kCutOff;
      out.trials.push_back(std::move(record));
      return absl::OkStatus();
    }
    ++out.colorings_solved;
    record.radius = solved->radius;
    Solution mapped = MapBack(*solved->solution, reduction->back_map, instance);
    if (mapped.trace)
      mapped.trace->coloring = Provenance(colored.coloring, out.coloring_mode);
    record.cost = mapped.cost;
    if (!CheckFeasibility(instance, mapped.centers).feasible) {
      record.outcome = TrialRecord::Outcome::kLowerBoundRejected;
      ++out.lower_bound_rejections;
      out.trials.push_back(std::move(record));
      return absl::OkStatus();
    }
    out.trials.push_back(std::move(record));
    best_radius = best_radius ? std::min(*best_radius, solved->radius) : solved->radius;
    if (!out.solution || BetterSolution(mapped, *out.solution))
      out.solution = std::move(mapped);
    return absl::OkStatus();
  };

  if (mode == ColoringMode::kExhaustive) {
    auto enumerator = ColoringEnumerator::Create(unit, options.enumeration_cap);
    if (!enumerator.ok()) return enumerator.status();
    while (std::optional<Coloring> coloring = enumerator->NextColoring()) {
      if (options.skip_relabelings &&
          !IsCanonicalColoring(coloring->color_of_group)) {
        ++out.skipped_relabelings;
        continue;
      }
      const uint64_t index = *coloring->enumeration_index;
      if (absl::Status s = process(index, ApplyColoring(unit, *std::move(coloring)));
          !s.ok())
        return s;
    }
  } else {
    const uint64_t trials =
        options.trials > 0 ? options.trials : RandomTrialCount(k, options.delta);
    constexpr int kMaxRedraws = 1000;
    std::set<std::vector<int>> seen;
    for (uint64_t t = 0; t < trials; ++t) {
      std::mt19937_64 seeds(options.seed + t);
      ColoredInstance colored = ColorCode(unit, seeds());
      for (int redraw = 0; colored.has_empty_class && redraw < kMaxRedraws; ++redraw) {
        ++out.empty_class_discards;
        colored = ColorCode(unit, seeds());
      }
      if (options.skip_relabelings &&
          !seen.insert(CanonicalForm(colored.coloring.color_of_group)).second) {
        ++out.skipped_relabelings;
        TrialRecord record;
        record.index = t;
        record.coloring = std::move(colored.coloring);
        record.outcome = TrialRecord::Outcome::kRepeated;
        out.trials.push_back(std::move(record));
        continue;
      }
      if (absl::Status s = process(t, std::move(colored)); !s.ok()) return s;
    }
  }

  if (!out.solution) {
    out.failure = absl::StrCat(
        "no feasible solution across ", out.colorings_total, " colorings (",
        out.colorings_solved, " solved, ", out.lower_bound_rejections,
        " rejected by group bounds, ", out.empty_class_discards,
        " with an empty color class)");
  }
  return out;
}

}  // namespace fairkc
