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

#ifndef WEREWOLF_GAME_ENGINE_H_
#define WEREWOLF_GAME_ENGINE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "werewolf/game/config.h"
#include "werewolf/game/state.h"

namespace werewolf {

inline constexpr int kMinBid = 0;
inline constexpr int kMaxBid = 4;

// Roles dealt by a seeded shuffle (or fixed_role_assignment); phase = Night,
// round = 1, werewolves already know each other.
GameState NewGame(const GameConfig& config);

// Lowest-seat alive werewolf; this seat picks the night kill.
std::optional<int> LeadWerewolf(const GameState& state);

// Sorted seats the actor may target tonight. Empty for roles without a night
// ability and for the non-lead werewolf.
std::vector<int> LegalNightTargets(const GameState& state, int actor);

// Alive seats other than the voter.
std::vector<int> LegalVoteTargets(const GameState& state, int voter);

struct SeerInvestigation {
  int seer;
  int target;
};

struct NightActions {
  std::optional<int> kill;  // chosen by the lead werewolf
  std::optional<int> save;
  std::optional<SeerInvestigation> investigate;
};

// Night actions resolve simultaneously. A save on the kill target cancels the
// kill. Advances to Day-Debate (or Ended). Throws GameError and leaves the
// state untouched on any illegal target.
void ResolveNight(GameState& state, const NightActions& actions);

// One bidding turn. Bids must cover exactly the alive players; values outside
// [0, 4] are clamped and logged. Returns the speaker, who must then speak via
// RecordUtterance. All-zero bids skip the turn.
std::optional<int> RunDebateTurn(GameState& state,
                                 const std::map<int, int>& bids);

// Logs the pending speaker's utterance and consumes the turn. After the last
// turn the phase moves to Day-Vote.
void RecordUtterance(GameState& state, std::string text);

// Plurality elimination. Missing or illegal votes (self, dead, unknown) are
// replaced with uniformly random legal votes and logged. Ties are broken
// uniformly with the match RNG. Returns the eliminated seat.
int TallyVotes(GameState& state, const std::map<int, int>& votes);

std::optional<Side> CheckWin(const GameState& state);

// Appends an agent-layer record (StrategySelected, EstimationSnapshot,
// PolicyNotice) to the log. Other event kinds are rejected.
void AppendAgentEvent(GameState& state, EventBody body);

}  // namespace werewolf

#endif  // WEREWOLF_GAME_ENGINE_H_
