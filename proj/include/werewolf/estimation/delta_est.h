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

#ifndef WEREWOLF_ESTIMATION_DELTA_EST_H_
#define WEREWOLF_ESTIMATION_DELTA_EST_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "werewolf/estimation/estimate_matrix.h"
#include "werewolf/estimation/metrics.h"
#include "werewolf/game/event.h"
#include "werewolf/game/role.h"

namespace werewolf {

// The estimation-relevant content of one finished match, in a form that does
// not depend on the transcript file format.
struct GameTrace {
  struct Moment {
    AdaptationMoment moment;
    std::vector<int> alive;  // seats alive when the snapshots were taken
    std::vector<EstimateMatrix> matrices;
    std::map<int, Strategy> selected;  // choices made at this moment
  };

  std::string game_id;
  std::optional<Side> winner;  // empty for truncated matches
  std::vector<Role> roles;     // seat-indexed truth
  // Seat-indexed; set for seats playing a fixed Support/Attack policy.
  std::vector<std::optional<Strategy>> fixed_strategy;
  std::vector<Moment> moments;  // chronological
};

// Est for every alive target at every moment. Observers are the alive seats
// other than the target whose snapshot holds a row for it; fallback
// snapshots are skipped. Targets without observers are omitted.
std::vector<EstReport> EstSeries(const GameTrace& trace);

enum class StrategySource { kAdaptation, kFixed };

struct DeltaEstBucket {
  StrategySource source = StrategySource::kAdaptation;
  Strategy strategy = Strategy::kSupport;
  Side outcome = Side::kVillagers;
  double mean_delta = 0.0;
  int sample_count = 0;

  std::string ColumnLabel() const;  // "Adaptation-Support", "Fix-Attack", ...
};

struct DeltaEstReport {
  // Always eight buckets: outcome-major (Villagers win first), columns in the
  // order Adaptation-Support, Adaptation-Attack, Fix-Support, Fix-Attack.
  std::vector<DeltaEstBucket> buckets;
  int excluded_few_snapshots = 0;  // fewer than two estimation moments
  int excluded_no_outcome = 0;     // truncated matches

  const DeltaEstBucket& At(StrategySource source, Strategy strategy,
                           Side outcome) const;
};

// Mean change of werewolf Est between consecutive estimation moments, grouped
// by the strategy the werewolf had at the start of the interval and by the
// final winner.
DeltaEstReport ComputeDeltaEst(std::span<const GameTrace> traces);

}  // namespace werewolf

#endif  // WEREWOLF_ESTIMATION_DELTA_EST_H_
