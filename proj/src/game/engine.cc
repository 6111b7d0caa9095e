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

#include "werewolf/game/engine.h"

#include <algorithm>
#include <span>
#include <string>
#include <utility>

#include "werewolf/game/errors.h"

namespace werewolf {
namespace {

void Append(GameState& state, Visibility visibility, std::vector<int> audience,
            EventBody body) {
  Event event;
  event.seq = static_cast<int>(state.event_log.size());
  event.round = state.round;
  event.phase = state.phase;
  event.visibility = visibility;
  event.audience = std::move(audience);
  event.body = std::move(body);
  state.event_log.push_back(std::move(event));
}

void AppendPublic(GameState& state, EventBody body) {
  Append(state, Visibility::kPublic, {}, std::move(body));
}

void AppendNotice(GameState& state, int seat, std::string kind,
                  std::string detail) {
  Append(state, Visibility::kInternal, {},
         PolicyNotice{seat, std::move(kind), std::move(detail)});
}

void RequireNotEnded(const GameState& state) {
  if (state.Ended()) {
    throw GameError(GameError::Kind::kGameOver, "the game has ended");
  }
}

void RequirePhase(const GameState& state, Phase phase) {
  RequireNotEnded(state);
  if (state.phase != phase) {
    throw GameError(GameError::Kind::kWrongPhase,
                    "expected phase " + std::string(PhaseName(phase)) +
                        ", game is in " + std::string(PhaseName(state.phase)));
  }
}

void RequireSeat(const GameState& state, int seat) {
  if (!state.HasSeat(seat)) {
    throw GameError(GameError::Kind::kUnknownPlayer,
                    "no player at seat " + std::to_string(seat));
  }
}

bool Contains(const std::vector<int>& seats, int seat) {
  return std::find(seats.begin(), seats.end(), seat) != seats.end();
}

std::vector<int> WerewolfSeats(const GameState& state) {
  std::vector<int> seats;
  for (const auto& p : state.players) {
    if (p.role == Role::kWerewolf) seats.push_back(p.seat);
  }
  return seats;
}

std::optional<int> AliveSeatWithRole(const GameState& state, Role role) {
  for (const auto& p : state.players) {
    if (p.alive && p.role == role) return p.seat;
  }
  return std::nullopt;
}

// Ends the game if a side has won. Returns true when the game is over.
bool SettleIfWon(GameState& state) {
  auto winner = CheckWin(state);
  if (!winner) return false;
  state.winner = winner;
  state.phase = Phase::kEnded;
  AppendPublic(state, GameEnded{winner, false});
  return true;
}

int PickUniform(GameState& state, const std::vector<int>& seats) {
  return state.rng.Pick(std::span<const int>(seats));
}

}  // namespace

GameState NewGame(const GameConfig& config) {
  ValidateConfig(config);
  GameState state;
  state.config = config;
  state.rng = MatchRng(config.seed);

  const int n = config.num_players();
  std::vector<Role> roles;
  if (config.fixed_role_assignment) {
    roles = *config.fixed_role_assignment;
  } else {
    for (Role role : kAllRoles) {
      roles.insert(roles.end(), config.role_counts[role], role);
    }
    state.rng.Shuffle(std::span<Role>(roles));
  }

  state.players.reserve(n);
  for (int seat = 0; seat < n; ++seat) {
    state.players.push_back(
        PlayerRecord{seat, config.player_names[seat], roles[seat], true});
  }
  state.known_roles.resize(n);
  const auto wolves = WerewolfSeats(state);
  for (int seat = 0; seat < n; ++seat) {
    state.known_roles[seat][seat] = roles[seat];
    if (roles[seat] == Role::kWerewolf) {
      for (int w : wolves) state.known_roles[seat][w] = Role::kWerewolf;
    }
  }
  state.phase = Phase::kNight;
  state.round = 1;
  return state;
}

std::optional<int> LeadWerewolf(const GameState& state) {
  return AliveSeatWithRole(state, Role::kWerewolf);
}

std::vector<int> LegalNightTargets(const GameState& state, int actor) {
  RequireSeat(state, actor);
  RequirePhase(state, Phase::kNight);
  if (!state.IsAlive(actor)) {
    throw GameError(GameError::Kind::kIllegalActor,
                    state.players[actor].name + " is dead");
  }
  std::vector<int> targets;
  switch (state.RoleOf(actor)) {
    case Role::kWerewolf:
      if (LeadWerewolf(state) != actor) break;
      for (const auto& p : state.players) {
        if (p.alive && p.role != Role::kWerewolf) targets.push_back(p.seat);
      }
      break;
    case Role::kSeer:
      for (const auto& p : state.players) {
        if (p.alive && p.seat != actor) targets.push_back(p.seat);
      }
      break;
    case Role::kDoctor:
      for (const auto& p : state.players) {
        if (!p.alive) continue;
        if (p.seat == actor && !state.config.doctor_may_self_save) continue;
        targets.push_back(p.seat);
      }
      break;
    case Role::kVillager:
      break;
  }
  return targets;
}

std::vector<int> LegalVoteTargets(const GameState& state, int voter) {
  std::vector<int> targets;
  for (const auto& p : state.players) {
    if (p.alive && p.seat != voter) targets.push_back(p.seat);
  }
  return targets;
}

void ResolveNight(GameState& state, const NightActions& actions) {
  RequirePhase(state, Phase::kNight);

  const auto lead = LeadWerewolf(state);
  const auto doctor = AliveSeatWithRole(state, Role::kDoctor);
  const auto seer = AliveSeatWithRole(state, Role::kSeer);

  // Validate everything before touching the state.
  if (actions.kill) {
    if (!lead || !Contains(LegalNightTargets(state, *lead), *actions.kill)) {
      throw GameError(GameError::Kind::kIllegalAction,
                      "illegal kill target " + std::to_string(*actions.kill));
    }
  }
  if (actions.save) {
    if (!doctor ||
        !Contains(LegalNightTargets(state, *doctor), *actions.save)) {
      throw GameError(GameError::Kind::kIllegalAction,
                      "illegal save target " + std::to_string(*actions.save));
    }
  }
  if (actions.investigate) {
    const auto& inv = *actions.investigate;
    if (!seer || inv.seer != *seer) {
      throw GameError(GameError::Kind::kIllegalActor,
                      "seat " + std::to_string(inv.seer) +
                          " cannot investigate");
    }
    if (!Contains(LegalNightTargets(state, *seer), inv.target)) {
      throw GameError(GameError::Kind::kIllegalAction,
                      "illegal investigation target " +
                          std::to_string(inv.target));
    }
  }

  if (actions.kill) {
    Append(state, Visibility::kPrivate, WerewolfSeats(state),
           WerewolfKillChosen{*lead, *actions.kill});
  }
  if (actions.save) {
    Append(state, Visibility::kPrivate, {*doctor},
           DoctorProtected{*doctor, *actions.save});
    state.doctor_saves.push_back(*actions.save);
  }
  if (actions.investigate) {
    const auto& inv = *actions.investigate;
    const Role found = state.RoleOf(inv.target);
    Append(state, Visibility::kPrivate, {inv.seer},
           SeerResult{inv.seer, inv.target, found});
    state.known_roles[inv.seer][inv.target] = found;
  }

  if (actions.kill && actions.kill != actions.save) {
    state.players[*actions.kill].alive = false;
    AppendPublic(state, NightDeathAnnounced{*actions.kill});
  } else {
    AppendPublic(state, NoDeathAnnounced{});
  }

  if (SettleIfWon(state)) return;
  state.phase = Phase::kDayDebate;
  state.debate_turn = 0;
  state.pending_speaker.reset();
}

std::optional<int> RunDebateTurn(GameState& state,
                                 const std::map<int, int>& bids) {
  RequirePhase(state, Phase::kDayDebate);
  if (state.pending_speaker) {
    throw GameError(GameError::Kind::kIllegalAction,
                    "previous speaker has not spoken yet");
  }
  const auto alive = state.AliveSeats();
  for (const auto& [seat, bid] : bids) {
    if (!state.IsAlive(seat)) {
      throw GameError(GameError::Kind::kIllegalActor,
                      "bid from seat " + std::to_string(seat) +
                          " which is not an alive player");
    }
  }
  for (int seat : alive) {
    if (!bids.contains(seat)) {
      throw GameError(GameError::Kind::kIllegalAction,
                      "missing bid for seat " + std::to_string(seat));
    }
  }

  int best = kMinBid;
  std::vector<int> leaders;
  for (int seat : alive) {
    int bid = bids.at(seat);
    if (bid < kMinBid || bid > kMaxBid) {
      const int clamped = std::clamp(bid, kMinBid, kMaxBid);
      AppendNotice(state, seat, "bid_clamped",
                   std::to_string(bid) + " -> " + std::to_string(clamped));
      bid = clamped;
    }
    if (bid > best) {
      best = bid;
      leaders.clear();
    }
    if (bid == best) leaders.push_back(seat);
  }

  if (best == kMinBid) {
    AppendPublic(state, DebateTurnSkipped{state.debate_turn});
    if (++state.debate_turn >= state.config.debate_turns) {
      state.phase = Phase::kDayVote;
    }
    return std::nullopt;
  }
  const int speaker =
      leaders.size() == 1 ? leaders.front() : PickUniform(state, leaders);
  state.pending_speaker = speaker;
  return speaker;
}

void RecordUtterance(GameState& state, std::string text) {
  RequirePhase(state, Phase::kDayDebate);
  if (!state.pending_speaker) {
    throw GameError(GameError::Kind::kIllegalAction,
                    "no speaker selected for this turn");
  }
  const int speaker = *state.pending_speaker;
  state.pending_speaker.reset();
  AppendPublic(state, DebateUtterance{speaker, std::move(text),
                                      state.debate_turn});
  if (++state.debate_turn >= state.config.debate_turns) {
    state.phase = Phase::kDayVote;
  }
}

int TallyVotes(GameState& state, const std::map<int, int>& votes) {
  RequirePhase(state, Phase::kDayVote);
  for (const auto& [voter, target] : votes) {
    if (!state.IsAlive(voter)) {
      throw GameError(GameError::Kind::kIllegalActor,
                      "vote from seat " + std::to_string(voter) +
                          " which is not an alive player");
    }
  }

  std::vector<int> counts(state.num_players(), 0);
  for (int voter : state.AliveSeats()) {
    const auto legal = LegalVoteTargets(state, voter);
    auto it = votes.find(voter);
    int target;
    if (it != votes.end() && Contains(legal, it->second)) {
      target = it->second;
    } else {
      target = PickUniform(state, legal);
      AppendNotice(state, voter, "vote_replaced",
                   it == votes.end()
                       ? "missing vote -> " + std::to_string(target)
                       : std::to_string(it->second) + " -> " +
                             std::to_string(target));
    }
    ++counts[target];
    AppendPublic(state, VoteCast{voter, target});
  }

  const int top = *std::max_element(counts.begin(), counts.end());
  std::vector<int> leaders;
  for (int seat = 0; seat < state.num_players(); ++seat) {
    if (counts[seat] == top) leaders.push_back(seat);
  }
  const int eliminated =
      leaders.size() == 1 ? leaders.front() : PickUniform(state, leaders);

  state.players[eliminated].alive = false;
  std::optional<Role> revealed;
  if (state.config.reveal_role_on_elimination) {
    revealed = state.RoleOf(eliminated);
  }
  AppendPublic(state, Eliminated{eliminated, revealed});

  if (SettleIfWon(state)) return eliminated;
  if (state.round >= state.config.max_rounds) {
    state.truncated = true;
    state.phase = Phase::kEnded;
    AppendPublic(state, GameEnded{std::nullopt, true});
    return eliminated;
  }
  ++state.round;
  state.phase = Phase::kNight;
  state.debate_turn = 0;
  return eliminated;
}

std::optional<Side> CheckWin(const GameState& state) {
  const int wolves = state.AliveCount(Side::kWerewolves);
  const int villagers = state.AliveCount(Side::kVillagers);
  if (wolves == 0) return Side::kVillagers;
  if (wolves >= villagers) return Side::kWerewolves;
  return std::nullopt;
}

void AppendAgentEvent(GameState& state, EventBody body) {
  RequireNotEnded(state);
  if (const auto* s = std::get_if<StrategySelected>(&body)) {
    RequireSeat(state, s->player);
    const int player = s->player;
    Append(state, Visibility::kPrivate, {player}, std::move(body));
  } else if (const auto* e = std::get_if<EstimationSnapshot>(&body)) {
    RequireSeat(state, e->observer);
    const int observer = e->observer;
    Append(state, Visibility::kPrivate, {observer}, std::move(body));
  } else if (std::holds_alternative<PolicyNotice>(body)) {
    Append(state, Visibility::kInternal, {}, std::move(body));
  } else {
    throw GameError(GameError::Kind::kIllegalAction,
                    "engine events cannot be appended by agents");
  }
}

std::vector<int> GameState::AliveSeats() const {
  std::vector<int> seats;
  for (const auto& p : players) {
    if (p.alive) seats.push_back(p.seat);
  }
  return seats;
}

int GameState::AliveCount(Side side) const {
  return static_cast<int>(std::count_if(
      players.begin(), players.end(),
      [side](const PlayerRecord& p) { return p.alive && SideOf(p.role) == side; }));
}

std::optional<int> GameState::SeatOfRole(Role role) const {
  for (const auto& p : players) {
    if (p.role == role) return p.seat;
  }
  return std::nullopt;
}

}  // namespace werewolf
