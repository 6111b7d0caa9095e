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

#include "werewolf/estimation/metrics.h"

#include <numeric>
#include <stdexcept>
#include <string>

namespace werewolf {

int RoleScores::Sum() const {
  return std::accumulate(values.begin(), values.end(), 0);
}

RoleScores RoleScores::Certain(Role role) {
  RoleScores row;
  row[role] = kMaxScore;
  return row;
}

RoleScores RoleScores::Uniform() { return RoleScores{{2, 2, 2, 2}}; }

void ValidateRow(const RoleScores& row) {
  for (int v : row.values) {
    if (v < kMinScore || v > kMaxScore) {
      throw InvalidEstimateError("score " + std::to_string(v) +
                                 " outside 0..4");
    }
  }
  if (row.Sum() == 0) throw InvalidEstimateError("all-zero estimate row");
}

double Accuracy(const RoleScores& row, Role true_role) {
  ValidateRow(row);
  return static_cast<double>(row[true_role]) / static_cast<double>(row.Sum());
}

EstReport Est(int target, std::span<const AccuracyRecord> accs,
              AdaptationMoment moment) {
  if (accs.empty()) {
    throw UndefinedEstError("no observers for target " +
                            std::to_string(target));
  }
  double total = 0.0;
  for (const auto& rec : accs) {
    if (rec.target != target) {
      throw std::invalid_argument("accuracy record for target " +
                                  std::to_string(rec.target) +
                                  " passed for target " +
                                  std::to_string(target));
    }
    total += rec.acc;
  }
  const int n = static_cast<int>(accs.size());
  return EstReport{target, moment, total / n, n};
}

}  // namespace werewolf
