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

#ifndef WEREWOLF_GAME_CONFIG_H_
#define WEREWOLF_GAME_CONFIG_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "werewolf/game/role.h"

namespace werewolf {

// Number of players holding each role, indexed by RoleIndex().
struct RoleCounts {
  std::array<int, kNumRoles> counts = {4, 1, 1, 2};

  int operator[](Role role) const { return counts[RoleIndex(role)]; }
  int& operator[](Role role) { return counts[RoleIndex(role)]; }
  int Total() const;
  bool operator==(const RoleCounts&) const = default;
};

std::vector<std::string> DefaultPlayerNames();

struct GameConfig {
  RoleCounts role_counts;
  std::vector<std::string> player_names = DefaultPlayerNames();
  int debate_turns = 8;
  int max_rounds = 10;
  std::uint64_t seed = 0;
  bool reveal_role_on_elimination = false;
  bool doctor_may_self_save = true;
  // Seat-indexed roles; bypasses the seeded shuffle when set.
  std::optional<std::vector<Role>> fixed_role_assignment;

  int num_players() const { return static_cast<int>(player_names.size()); }
};

// Throws ConfigError describing the first problem found.
void ValidateConfig(const GameConfig& config);

}  // namespace werewolf

#endif  // WEREWOLF_GAME_CONFIG_H_
