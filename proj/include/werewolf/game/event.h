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

#ifndef WEREWOLF_GAME_EVENT_H_
#define WEREWOLF_GAME_EVENT_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "werewolf/game/role.h"

namespace werewolf {

enum class Phase { kNight, kDayDebate, kDayVote, kEnded };

std::string_view PhaseName(Phase phase);
std::optional<Phase> ParsePhase(std::string_view name);

// Vocabulary shared by the engine log and the agent layer.
enum class Strategy { kSupport, kAttack };

std::string_view StrategyName(Strategy strategy);
std::optional<Strategy> ParseStrategy(std::string_view name);

enum class MomentKind { kAfterNightAbilities, kAfterDebate, kAfterVote };

struct AdaptationMoment {
  MomentKind kind = MomentKind::kAfterNightAbilities;
  int round = 1;

  // Chronological position; three moments per round.
  int Ordinal() const { return (round - 1) * 3 + static_cast<int>(kind); }
  bool operator==(const AdaptationMoment&) const = default;
};

std::string_view MomentKindName(MomentKind kind);
std::optional<MomentKind> ParseMomentKind(std::string_view name);

struct NightDeathAnnounced {
  int victim;
};
struct NoDeathAnnounced {};
// Private to the werewolves.
struct WerewolfKillChosen {
  int lead;
  int target;
};
// Private to the doctor.
struct DoctorProtected {
  int doctor;
  int target;
};
// Private to the seer.
struct SeerResult {
  int seer;
  int target;
  Role role;
};
struct DebateUtterance {
  int speaker;
  std::string text;
  int turn_index;
};
struct DebateTurnSkipped {
  int turn_index;
};
struct VoteCast {
  int voter;
  int target;
};
struct Eliminated {
  int target;
  std::optional<Role> revealed_role;
};
// Private to the selecting player.
struct StrategySelected {
  int player;
  AdaptationMoment moment;
  Strategy strategy;
  std::string rationale;
};
// Private to the observer; snapshot_id indexes the transcript's snapshot list.
struct EstimationSnapshot {
  int observer;
  int snapshot_id;
  AdaptationMoment moment;
  bool measurement_only;
  bool fallback;
};
// Internal diagnostics (clamped bids, fallbacks, substitutions). Never shown
// to players.
struct PolicyNotice {
  int seat;
  std::string kind;
  std::string detail;
};
struct GameEnded {
  std::optional<Side> winner;
  bool truncated;
};

using EventBody =
    std::variant<NightDeathAnnounced, NoDeathAnnounced, WerewolfKillChosen,
                 DoctorProtected, SeerResult, DebateUtterance,
                 DebateTurnSkipped, VoteCast, Eliminated, StrategySelected,
                 EstimationSnapshot, PolicyNotice, GameEnded>;

enum class Visibility { kPublic, kPrivate, kInternal };

struct Event {
  int seq = 0;
  int round = 1;
  Phase phase = Phase::kNight;
  Visibility visibility = Visibility::kPublic;
  std::vector<int> audience;  // seats, for kPrivate
  EventBody body;

  bool VisibleTo(int seat) const;
};

// Stable snake_case kind tag ("vote_cast", "seer_result", ...).
std::string_view EventKindName(const EventBody& body);

template <typename T>
const T* EventAs(const Event& event) {
  return std::get_if<T>(&event.body);
}

}  // namespace werewolf

#endif  // WEREWOLF_GAME_EVENT_H_
