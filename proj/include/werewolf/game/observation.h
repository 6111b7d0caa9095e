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

#ifndef WEREWOLF_GAME_OBSERVATION_H_
#define WEREWOLF_GAME_OBSERVATION_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "werewolf/game/config.h"
#include "werewolf/game/event.h"
#include "werewolf/game/role.h"
#include "werewolf/game/state.h"

namespace werewolf {

struct RosterEntry {
  int seat = 0;
  std::string name;
  bool alive = true;
};

// What one player is allowed to see. Other players' roles appear only through
// known_roles (werewolf teammates, the seer's own findings).
struct Observation {
  int seat = 0;
  std::string name;
  Role role = Role::kVillager;
  int round = 1;
  Phase phase = Phase::kNight;
  int debate_turn = 0;
  int debate_turns = 8;
  bool doctor_may_self_save = true;
  RoleCounts role_counts;
  std::vector<RosterEntry> roster;
  std::map<int, Role> known_roles;  // includes self
  std::vector<Event> events;        // public + this player's private events

  std::vector<int> AliveSeats() const;
  std::vector<int> AliveOthers() const;
  bool IsAlive(int seat) const;
  const std::string& NameOf(int seat) const;
  std::optional<int> SeatOf(std::string_view name) const;  // case-insensitive
  std::optional<Role> KnownRole(int seat) const;
  std::vector<int> Teammates() const;  // other known werewolves, if werewolf
};

// Throws GameError(kUnknownPlayer) for a seat outside the game.
Observation Observe(const GameState& state, int viewer);

}  // namespace werewolf

#endif  // WEREWOLF_GAME_OBSERVATION_H_
