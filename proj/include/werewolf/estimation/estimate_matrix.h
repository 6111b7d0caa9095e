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

#ifndef WEREWOLF_ESTIMATION_ESTIMATE_MATRIX_H_
#define WEREWOLF_ESTIMATION_ESTIMATE_MATRIX_H_

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "werewolf/game/event.h"
#include "werewolf/game/role.h"

namespace werewolf {

inline constexpr int kMinScore = 0;
inline constexpr int kMaxScore = 4;

// One observer's 0-4 scores for a single target, indexed by RoleIndex().
struct RoleScores {
  std::array<int, kNumRoles> values = {0, 0, 0, 0};

  int operator[](Role role) const { return values[RoleIndex(role)]; }
  int& operator[](Role role) { return values[RoleIndex(role)]; }
  int Sum() const;
  bool operator==(const RoleScores&) const = default;

  static RoleScores Certain(Role role);  // 4 on role, 0 elsewhere
  static RoleScores Uniform();          // 2 everywhere
};

class InvalidEstimateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws InvalidEstimateError unless every score is in 0..4 and the row has
// positive mass.
void ValidateRow(const RoleScores& row);

struct EstimateMatrix {
  int observer = 0;
  AdaptationMoment moment;
  std::map<int, RoleScores> scores;  // target seat -> row; never the observer
  std::map<int, std::string> reasoning;
  std::set<int> known_targets;       // rows pre-filled from certain knowledge
  bool measurement_only = false;
  bool fallback = false;             // some rows are the uniform fallback
};

}  // namespace werewolf

#endif  // WEREWOLF_ESTIMATION_ESTIMATE_MATRIX_H_
