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

#include "werewolf/game/config.h"

#include <numeric>
#include <set>
#include <string>

#include "werewolf/game/errors.h"

namespace werewolf {

int RoleCounts::Total() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

std::vector<std::string> DefaultPlayerNames() {
  return {"Will", "Jacob", "Dan", "David", "Mason", "Hayley", "Ginger", "Paul"};
}

void ValidateConfig(const GameConfig& config) {
  const int n = config.num_players();
  if (n < 3) throw ConfigError("need at least 3 players");
  for (Role role : kAllRoles) {
    if (config.role_counts[role] < 0) {
      throw ConfigError("negative count for role " +
                        std::string(RoleName(role)));
    }
  }
  if (config.role_counts.Total() != n) {
    throw ConfigError("role counts sum to " +
                      std::to_string(config.role_counts.Total()) +
                      " but there are " + std::to_string(n) + " players");
  }
  const int wolves = config.role_counts[Role::kWerewolf];
  if (wolves < 1) throw ConfigError("need at least one werewolf");
  if (wolves >= n - wolves) {
    throw ConfigError("werewolves must start outnumbered");
  }
  if (config.role_counts[Role::kSeer] > 1 ||
      config.role_counts[Role::kDoctor] > 1) {
    throw ConfigError("at most one seer and one doctor are supported");
  }
  if (config.debate_turns < 1) throw ConfigError("debate_turns must be >= 1");
  if (config.max_rounds < 1) throw ConfigError("max_rounds must be >= 1");

  std::set<std::string> names;
  for (const auto& name : config.player_names) {
    if (name.empty()) throw ConfigError("empty player name");
    if (!names.insert(name).second) {
      throw ConfigError("duplicate player name " + name);
    }
  }

  if (config.fixed_role_assignment) {
    const auto& fixed = *config.fixed_role_assignment;
    if (static_cast<int>(fixed.size()) != n) {
      throw ConfigError("fixed role assignment must cover every seat");
    }
    RoleCounts seen;
    seen.counts.fill(0);
    for (Role role : fixed) ++seen[role];
    if (seen != config.role_counts) {
      throw ConfigError("fixed role assignment disagrees with role counts");
    }
  }
}

}  // namespace werewolf
