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

#ifndef WEREWOLF_GAME_STATE_H_
#define WEREWOLF_GAME_STATE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "werewolf/game/config.h"
#include "werewolf/game/event.h"
#include "werewolf/game/rng.h"
#include "werewolf/game/role.h"

namespace werewolf {

struct PlayerRecord {
  int seat = 0;
  std::string name;
  Role role = Role::kVillager;
  bool alive = true;
};

// Authoritative record of one match. Mutated only through engine.h.
struct GameState {
  GameConfig config;
  int round = 1;
  Phase phase = Phase::kNight;
  int debate_turn = 0;  // turns consumed in the current day
  std::optional<int> pending_speaker;
  std::vector<PlayerRecord> players;
  std::vector<Event> event_log;
  // Per seat: roles that seat knows for certain (self, teammates, seer finds).
  std::vector<std::map<int, Role>> known_roles;
  std::vector<int> doctor_saves;
  std::optional<Side> winner;
  bool truncated = false;
  MatchRng rng;

  int num_players() const { return static_cast<int>(players.size()); }
  bool HasSeat(int seat) const { return seat >= 0 && seat < num_players(); }
  bool IsAlive(int seat) const { return HasSeat(seat) && players[seat].alive; }
  Role RoleOf(int seat) const { return players.at(seat).role; }
  std::vector<int> AliveSeats() const;
  int AliveCount(Side side) const;
  std::optional<int> SeatOfRole(Role role) const;  // first seat, alive or not
  bool Ended() const { return phase == Phase::kEnded; }
};

}  // namespace werewolf

#endif  // WEREWOLF_GAME_STATE_H_
