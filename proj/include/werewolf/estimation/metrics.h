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

#ifndef WEREWOLF_ESTIMATION_METRICS_H_
#define WEREWOLF_ESTIMATION_METRICS_H_

#include <span>

#include "werewolf/estimation/estimate_matrix.h"
#include "werewolf/game/event.h"
#include "werewolf/game/role.h"

namespace werewolf {

// Share of the observer's score mass that sits on the target's true role:
// row[true_role] / sum(row). Throws InvalidEstimateError for invalid rows.
double Accuracy(const RoleScores& row, Role true_role);

struct AccuracyRecord {
  int observer = 0;
  int target = 0;
  double acc = 0.0;
};

struct EstReport {
  int target = 0;
  AdaptationMoment moment;
  double est = 0.0;
  int n = 0;  // observers averaged over
};

class UndefinedEstError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mean accuracy over the given observers of one target. Throws
// UndefinedEstError when there are no observers and std::invalid_argument
// when a record refers to a different target.
EstReport Est(int target, std::span<const AccuracyRecord> accs,
              AdaptationMoment moment = {});

}  // namespace werewolf

#endif  // WEREWOLF_ESTIMATION_METRICS_H_
