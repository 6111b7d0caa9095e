// Copyright 2026 The Werewolf Arena Strategy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "werewolf/estimation/delta_est.h"

#include <algorithm>
#include <stdexcept>

namespace werewolf {
namespace {

constexpr StrategySource kSources[] = {StrategySource::kAdaptation,
                                       StrategySource::kFixed};
constexpr Strategy kStrategies[] = {Strategy::kSupport, Strategy::kAttack};
constexpr Side kOutcomes[] = {Side::kVillagers, Side::kWerewolves};

bool Contains(const std::vector<int>& seats, int seat) {
  return std::find(seats.begin(), seats.end(), seat) != seats.end();
}

std::optional<EstReport> EstAt(const GameTrace& trace,
                               const GameTrace::Moment& moment, int target) {
  if (!Contains(moment.alive, target)) return std::nullopt;
  std::vector<AccuracyRecord> accs;
  for (const auto& matrix : moment.matrices) {
    if (matrix.fallback || matrix.observer == target) continue;
    if (!Contains(moment.alive, matrix.observer)) continue;
    auto it = matrix.scores.find(target);
    if (it == matrix.scores.end()) continue;
    try {
      accs.push_back(AccuracyRecord{matrix.observer, target,
                                    Accuracy(it->second, trace.roles[target])});
    } catch (const InvalidEstimateError&) {
      continue;
    }
  }
  if (accs.empty()) return std::nullopt;
  return Est(target, accs, moment.moment);
}

}  // namespace

std::string DeltaEstBucket::ColumnLabel() const {
  std::string label =
      source == StrategySource::kAdaptation ? "Adaptation-" : "Fix-";
  label += strategy == Strategy::kSupport ? "Support" : "Attack";
  return label;
}

const DeltaEstBucket& DeltaEstReport::At(StrategySource source,
                                         Strategy strategy,
                                         Side outcome) const {
  for (const auto& b : buckets) {
    if (b.source == source && b.strategy == strategy && b.outcome == outcome) {
      return b;
    }
  }
  throw std::out_of_range("no such delta-est bucket");
}

std::vector<EstReport> EstSeries(const GameTrace& trace) {
  std::vector<EstReport> series;
  for (const auto& moment : trace.moments) {
    for (int target : moment.alive) {
      if (auto est = EstAt(trace, moment, target)) series.push_back(*est);
    }
  }
  return series;
}

DeltaEstReport ComputeDeltaEst(std::span<const GameTrace> traces) {
  DeltaEstReport report;
  struct Acc {
    double sum = 0.0;
    int n = 0;
  };
  // [outcome][source][strategy]
  Acc acc[2][2][2] = {};

  for (const auto& trace : traces) {
    if (trace.moments.size() < 2) {
      ++report.excluded_few_snapshots;
      continue;
    }
    if (!trace.winner) {
      ++report.excluded_no_outcome;
      continue;
    }
    const int outcome = *trace.winner == Side::kVillagers ? 0 : 1;
    for (int wolf = 0; wolf < static_cast<int>(trace.roles.size()); ++wolf) {
      if (trace.roles[wolf] != Role::kWerewolf) continue;
      for (std::size_t k = 1; k < trace.moments.size(); ++k) {
        const auto& start = trace.moments[k - 1];
        const auto& end = trace.moments[k];
        std::optional<Strategy> strategy;
        StrategySource source;
        if (wolf < static_cast<int>(trace.fixed_strategy.size()) &&
            trace.fixed_strategy[wolf]) {
          strategy = trace.fixed_strategy[wolf];
          source = StrategySource::kFixed;
        } else if (auto it = start.selected.find(wolf);
                   it != start.selected.end()) {
          strategy = it->second;
          source = StrategySource::kAdaptation;
        }
        if (!strategy) continue;
        const auto before = EstAt(trace, start, wolf);
        const auto after = EstAt(trace, end, wolf);
        if (!before || !after) continue;
        Acc& cell = acc[outcome][source == StrategySource::kFixed ? 1 : 0]
                       [*strategy == Strategy::kAttack ? 1 : 0];
        cell.sum += after->est - before->est;
        ++cell.n;
      }
    }
  }

  for (Side outcome : kOutcomes) {
    for (StrategySource source : kSources) {
      for (Strategy strategy : kStrategies) {
        const Acc& cell = acc[outcome == Side::kVillagers ? 0 : 1]
                             [source == StrategySource::kFixed ? 1 : 0]
                             [strategy == Strategy::kAttack ? 1 : 0];
        DeltaEstBucket bucket;
        bucket.source = source;
        bucket.strategy = strategy;
        bucket.outcome = outcome;
        bucket.sample_count = cell.n;
        bucket.mean_delta = cell.n > 0 ? cell.sum / cell.n : 0.0;
        report.buckets.push_back(bucket);
      }
    }
  }
  return report;
}

}  // namespace werewolf
