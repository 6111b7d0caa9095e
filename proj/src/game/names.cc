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

// String tables for the game vocabulary.

#include <algorithm>
#include <array>
#include <utility>

#include "werewolf/game/event.h"
#include "werewolf/game/role.h"

namespace werewolf {
namespace {

template <typename E, std::size_t N>
std::optional<E> Lookup(const std::array<std::pair<E, std::string_view>, N>& table,
                        std::string_view name) {
  for (const auto& [value, text] : table) {
    if (text == name) return value;
  }
  return std::nullopt;
}

template <typename E, std::size_t N>
std::string_view NameIn(const std::array<std::pair<E, std::string_view>, N>& table,
                        E value) {
  for (const auto& [v, text] : table) {
    if (v == value) return text;
  }
  return "unknown";
}

constexpr std::array<std::pair<Role, std::string_view>, 4> kRoleNames = {{
    {Role::kVillager, "villager"},
    {Role::kSeer, "seer"},
    {Role::kDoctor, "doctor"},
    {Role::kWerewolf, "werewolf"},
}};

constexpr std::array<std::pair<Role, std::string_view>, 4> kRoleDisplayNames = {{
    {Role::kVillager, "Villager"},
    {Role::kSeer, "Seer"},
    {Role::kDoctor, "Doctor"},
    {Role::kWerewolf, "Werewolf"},
}};

constexpr std::array<std::pair<Side, std::string_view>, 2> kSideNames = {{
    {Side::kVillagers, "villagers"},
    {Side::kWerewolves, "werewolves"},
}};

constexpr std::array<std::pair<Phase, std::string_view>, 4> kPhaseNames = {{
    {Phase::kNight, "night"},
    {Phase::kDayDebate, "day_debate"},
    {Phase::kDayVote, "day_vote"},
    {Phase::kEnded, "ended"},
}};

constexpr std::array<std::pair<Strategy, std::string_view>, 2> kStrategyNames = {{
    {Strategy::kSupport, "support"},
    {Strategy::kAttack, "attack"},
}};

constexpr std::array<std::pair<MomentKind, std::string_view>, 3> kMomentNames = {{
    {MomentKind::kAfterNightAbilities, "after_night_abilities"},
    {MomentKind::kAfterDebate, "after_debate"},
    {MomentKind::kAfterVote, "after_vote"},
}};

}  // namespace

std::string_view RoleName(Role role) { return NameIn(kRoleNames, role); }
std::string_view RoleDisplayName(Role role) {
  return NameIn(kRoleDisplayNames, role);
}
std::optional<Role> ParseRole(std::string_view name) {
  if (auto r = Lookup(kRoleNames, name)) return r;
  return Lookup(kRoleDisplayNames, name);
}

std::string_view SideName(Side side) { return NameIn(kSideNames, side); }
std::optional<Side> ParseSide(std::string_view name) {
  return Lookup(kSideNames, name);
}

std::string_view PhaseName(Phase phase) { return NameIn(kPhaseNames, phase); }
std::optional<Phase> ParsePhase(std::string_view name) {
  return Lookup(kPhaseNames, name);
}

std::string_view StrategyName(Strategy strategy) {
  return NameIn(kStrategyNames, strategy);
}
std::optional<Strategy> ParseStrategy(std::string_view name) {
  return Lookup(kStrategyNames, name);
}

std::string_view MomentKindName(MomentKind kind) {
  return NameIn(kMomentNames, kind);
}
std::optional<MomentKind> ParseMomentKind(std::string_view name) {
  return Lookup(kMomentNames, name);
}

std::string_view EventKindName(const EventBody& body) {
  struct Namer {
    std::string_view operator()(const NightDeathAnnounced&) const {
      return "night_death_announced";
    }
    std::string_view operator()(const NoDeathAnnounced&) const {
      return "no_death_announced";
    }
    std::string_view operator()(const WerewolfKillChosen&) const {
      return "werewolf_kill_chosen";
    }
    std::string_view operator()(const DoctorProtected&) const {
      return "doctor_protected";
    }
    std::string_view operator()(const SeerResult&) const {
      return "seer_result";
    }
    std::string_view operator()(const DebateUtterance&) const {
      return "debate_utterance";
    }
    std::string_view operator()(const DebateTurnSkipped&) const {
      return "debate_turn_skipped";
    }
    std::string_view operator()(const VoteCast&) const { return "vote_cast"; }
    std::string_view operator()(const Eliminated&) const {
      return "eliminated";
    }
    std::string_view operator()(const StrategySelected&) const {
      return "strategy_selected";
    }
    std::string_view operator()(const EstimationSnapshot&) const {
      return "estimation_snapshot";
    }
    std::string_view operator()(const PolicyNotice&) const {
      return "policy_notice";
    }
    std::string_view operator()(const GameEnded&) const {
      return "game_ended";
    }
  };
  return std::visit(Namer{}, body);
}

bool Event::VisibleTo(int seat) const {
  switch (visibility) {
    case Visibility::kPublic:
      return true;
    case Visibility::kPrivate:
      return std::find(audience.begin(), audience.end(), seat) !=
             audience.end();
    case Visibility::kInternal:
      return false;
  }
  return false;
}

}  // namespace werewolf
