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

#ifndef WEREWOLF_TOURNAMENT_MATCH_H_
#define WEREWOLF_TOURNAMENT_MATCH_H_

#include <functional>
#include <map>
#include <string>

#include "werewolf/agents/policy_factory.h"
#include "werewolf/game/state.h"
#include "werewolf/tournament/transcript.h"

namespace werewolf {

struct MatchSetup {
  GameConfig config;  // config.seed seeds the deal, tie-breaks and fallbacks
  std::string game_id;
  std::string label;
  PolicyKind villager_policy = PolicyKind::kScripted;
  PolicyKind werewolf_policy = PolicyKind::kScripted;
  std::map<int, PolicyKind> seat_overrides;
  PolicyDeps deps;  // seed and game_id are filled in from the setup

  // Called after every appended event, on the match thread. `snapshot` is
  // set for EstimationSnapshot events.
  std::function<void(const Event& event, const GameState& state,
                     const EstimateMatrix* snapshot)>
      on_event;
};

// Plays one match to completion. Every agent decision is checked before it
// reaches the engine; an illegal one is replaced by a random legal action
// and counted. Backend hard failures (e.g. a cassette miss) propagate.
Transcript RunMatch(const MatchSetup& setup);

}  // namespace werewolf

#endif  // WEREWOLF_TOURNAMENT_MATCH_H_
