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

#include "werewolf/game/observation.h"

#include <algorithm>
#include <cctype>

#include "werewolf/game/errors.h"

namespace werewolf {
namespace {

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

}  // namespace

Observation Observe(const GameState& state, int viewer) {
  if (!state.HasSeat(viewer)) {
    throw GameError(GameError::Kind::kUnknownPlayer,
                    "no player at seat " + std::to_string(viewer));
  }
  Observation obs;
  obs.seat = viewer;
  obs.name = state.players[viewer].name;
  obs.role = state.players[viewer].role;
  obs.round = state.round;
  obs.phase = state.phase;
  obs.debate_turn = state.debate_turn;
  obs.debate_turns = state.config.debate_turns;
  obs.doctor_may_self_save = state.config.doctor_may_self_save;
  obs.role_counts = state.config.role_counts;
  obs.roster.reserve(state.players.size());
  for (const auto& p : state.players) {
    obs.roster.push_back(RosterEntry{p.seat, p.name, p.alive});
  }
  obs.known_roles = state.known_roles[viewer];
  for (const auto& event : state.event_log) {
    if (event.VisibleTo(viewer)) obs.events.push_back(event);
  }
  return obs;
}

std::vector<int> Observation::AliveSeats() const {
  std::vector<int> seats;
  for (const auto& r : roster) {
    if (r.alive) seats.push_back(r.seat);
  }
  return seats;
}

std::vector<int> Observation::AliveOthers() const {
  std::vector<int> seats;
  for (const auto& r : roster) {
    if (r.alive && r.seat != seat) seats.push_back(r.seat);
  }
  return seats;
}

bool Observation::IsAlive(int s) const {
  return s >= 0 && s < static_cast<int>(roster.size()) && roster[s].alive;
}

const std::string& Observation::NameOf(int s) const { return roster.at(s).name; }

std::optional<int> Observation::SeatOf(std::string_view player_name) const {
  for (const auto& r : roster) {
    if (EqualsIgnoreCase(r.name, player_name)) return r.seat;
  }
  return std::nullopt;
}

std::optional<Role> Observation::KnownRole(int s) const {
  auto it = known_roles.find(s);
  if (it == known_roles.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Observation::Teammates() const {
  std::vector<int> mates;
  if (role != Role::kWerewolf) return mates;
  for (const auto& [s, r] : known_roles) {
    if (s != seat && r == Role::kWerewolf) mates.push_back(s);
  }
  return mates;
}

}  // namespace werewolf
