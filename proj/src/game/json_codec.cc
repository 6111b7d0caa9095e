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

#include "werewolf/game/json_codec.h"

#include <string>

namespace werewolf {
namespace {

template <typename T, typename Parser>
T ParseEnum(const Json& j, Parser parse, const char* what) {
  auto parsed = parse(j.get<std::string>());
  if (!parsed) {
    throw JsonFormatError(std::string("unknown ") + what + " '" +
                          j.get<std::string>() + "'");
  }
  return *parsed;
}

Role RoleFrom(const Json& j) { return ParseEnum<Role>(j, ParseRole, "role"); }

Json OptionalRole(const std::optional<Role>& role) {
  return role ? Json(RoleName(*role)) : Json(nullptr);
}

struct BodyEncoder {
  Json& out;
  void operator()(const NightDeathAnnounced& e) { out["victim"] = e.victim; }
  void operator()(const NoDeathAnnounced&) {}
  void operator()(const WerewolfKillChosen& e) {
    out["lead"] = e.lead;
    out["target"] = e.target;
  }
  void operator()(const DoctorProtected& e) {
    out["doctor"] = e.doctor;
    out["target"] = e.target;
  }
  void operator()(const SeerResult& e) {
    out["seer"] = e.seer;
    out["target"] = e.target;
    out["role"] = RoleName(e.role);
  }
  void operator()(const DebateUtterance& e) {
    out["speaker"] = e.speaker;
    out["text"] = e.text;
    out["turn_index"] = e.turn_index;
  }
  void operator()(const DebateTurnSkipped& e) {
    out["turn_index"] = e.turn_index;
  }
  void operator()(const VoteCast& e) {
    out["voter"] = e.voter;
    out["target"] = e.target;
  }
  void operator()(const Eliminated& e) {
    out["target"] = e.target;
    out["revealed_role"] = OptionalRole(e.revealed_role);
  }
  void operator()(const StrategySelected& e) {
    out["player"] = e.player;
    out["moment"] = MomentToJson(e.moment);
    out["strategy"] = StrategyName(e.strategy);
    out["rationale"] = e.rationale;
  }
  void operator()(const EstimationSnapshot& e) {
    out["observer"] = e.observer;
    out["snapshot_id"] = e.snapshot_id;
    out["moment"] = MomentToJson(e.moment);
    out["measurement_only"] = e.measurement_only;
    out["fallback"] = e.fallback;
  }
  void operator()(const PolicyNotice& e) {
    out["seat"] = e.seat;
    out["notice"] = e.kind;
    out["detail"] = e.detail;
  }
  void operator()(const GameEnded& e) {
    out["winner"] = e.winner ? Json(SideName(*e.winner)) : Json(nullptr);
    out["truncated"] = e.truncated;
  }
};

EventBody BodyFromJson(const std::string& kind, const Json& j) {
  if (kind == "night_death_announced") {
    return NightDeathAnnounced{j.at("victim").get<int>()};
  }
  if (kind == "no_death_announced") return NoDeathAnnounced{};
  if (kind == "werewolf_kill_chosen") {
    return WerewolfKillChosen{j.at("lead").get<int>(),
                              j.at("target").get<int>()};
  }
  if (kind == "doctor_protected") {
    return DoctorProtected{j.at("doctor").get<int>(),
                           j.at("target").get<int>()};
  }
  if (kind == "seer_result") {
    return SeerResult{j.at("seer").get<int>(), j.at("target").get<int>(),
                      RoleFrom(j.at("role"))};
  }
  if (kind == "debate_utterance") {
    return DebateUtterance{j.at("speaker").get<int>(),
                           j.at("text").get<std::string>(),
                           j.at("turn_index").get<int>()};
  }
  if (kind == "debate_turn_skipped") {
    return DebateTurnSkipped{j.at("turn_index").get<int>()};
  }
  if (kind == "vote_cast") {
    return VoteCast{j.at("voter").get<int>(), j.at("target").get<int>()};
  }
  if (kind == "eliminated") {
    std::optional<Role> revealed;
    if (j.contains("revealed_role") && !j["revealed_role"].is_null()) {
      revealed = RoleFrom(j["revealed_role"]);
    }
    return Eliminated{j.at("target").get<int>(), revealed};
  }
  if (kind == "strategy_selected") {
    return StrategySelected{
        j.at("player").get<int>(), MomentFromJson(j.at("moment")),
        ParseEnum<Strategy>(j.at("strategy"), ParseStrategy, "strategy"),
        j.value("rationale", "")};
  }
  if (kind == "estimation_snapshot") {
    return EstimationSnapshot{j.at("observer").get<int>(),
                              j.at("snapshot_id").get<int>(),
                              MomentFromJson(j.at("moment")),
                              j.at("measurement_only").get<bool>(),
                              j.at("fallback").get<bool>()};
  }
  if (kind == "policy_notice") {
    return PolicyNotice{j.at("seat").get<int>(),
                        j.at("notice").get<std::string>(),
                        j.value("detail", "")};
  }
  if (kind == "game_ended") {
    std::optional<Side> winner;
    if (!j.at("winner").is_null()) {
      winner = ParseEnum<Side>(j["winner"], ParseSide, "side");
    }
    return GameEnded{winner, j.at("truncated").get<bool>()};
  }
  throw JsonFormatError("unknown event kind '" + kind + "'");
}

std::string_view VisibilityName(Visibility v) {
  switch (v) {
    case Visibility::kPublic:
      return "public";
    case Visibility::kPrivate:
      return "private";
    case Visibility::kInternal:
      return "internal";
  }
  return "internal";
}

Visibility ParseVisibility(const std::string& name) {
  if (name == "public") return Visibility::kPublic;
  if (name == "private") return Visibility::kPrivate;
  if (name == "internal") return Visibility::kInternal;
  throw JsonFormatError("unknown visibility '" + name + "'");
}

}  // namespace

Json MomentToJson(const AdaptationMoment& moment) {
  return Json{{"kind", MomentKindName(moment.kind)}, {"round", moment.round}};
}

AdaptationMoment MomentFromJson(const Json& j) {
  return AdaptationMoment{
      ParseEnum<MomentKind>(j.at("kind"), ParseMomentKind, "moment"),
      j.at("round").get<int>()};
}

Json EventToJson(const Event& event) {
  Json j;
  j["seq"] = event.seq;
  j["round"] = event.round;
  j["phase"] = PhaseName(event.phase);
  j["visibility"] = VisibilityName(event.visibility);
  if (event.visibility == Visibility::kPrivate) j["audience"] = event.audience;
  j["kind"] = EventKindName(event.body);
  std::visit(BodyEncoder{j}, event.body);
  return j;
}

Event EventFromJson(const Json& j) {
  try {
    Event event;
    event.seq = j.at("seq").get<int>();
    event.round = j.at("round").get<int>();
    event.phase = ParseEnum<Phase>(j.at("phase"), ParsePhase, "phase");
    event.visibility = ParseVisibility(j.at("visibility").get<std::string>());
    if (j.contains("audience")) {
      event.audience = j["audience"].get<std::vector<int>>();
    }
    event.body = BodyFromJson(j.at("kind").get<std::string>(), j);
    return event;
  } catch (const nlohmann::json::exception& e) {
    throw JsonFormatError(e.what());
  }
}

Json ConfigToJson(const GameConfig& config) {
  Json counts;
  for (Role role : kAllRoles) counts[RoleName(role)] = config.role_counts[role];
  Json j{
      {"role_counts", counts},
      {"player_names", config.player_names},
      {"debate_turns", config.debate_turns},
      {"max_rounds", config.max_rounds},
      {"seed", config.seed},
      {"reveal_role_on_elimination", config.reveal_role_on_elimination},
      {"doctor_may_self_save", config.doctor_may_self_save},
  };
  if (config.fixed_role_assignment) {
    Json roles = Json::array();
    for (Role r : *config.fixed_role_assignment) roles.push_back(RoleName(r));
    j["fixed_role_assignment"] = roles;
  } else {
    j["fixed_role_assignment"] = nullptr;
  }
  return j;
}

GameConfig ConfigFromJson(const Json& j) {
  try {
    GameConfig config;
    if (j.contains("role_counts")) {
      for (const auto& [name, count] : j["role_counts"].items()) {
        auto role = ParseRole(name);
        if (!role) throw JsonFormatError("unknown role '" + name + "'");
        config.role_counts[*role] = count.get<int>();
      }
    }
    if (j.contains("player_names")) {
      config.player_names = j["player_names"].get<std::vector<std::string>>();
    }
    config.debate_turns = j.value("debate_turns", config.debate_turns);
    config.max_rounds = j.value("max_rounds", config.max_rounds);
    config.seed = j.value("seed", config.seed);
    config.reveal_role_on_elimination = j.value(
        "reveal_role_on_elimination", config.reveal_role_on_elimination);
    config.doctor_may_self_save =
        j.value("doctor_may_self_save", config.doctor_may_self_save);
    if (j.contains("fixed_role_assignment") &&
        !j["fixed_role_assignment"].is_null()) {
      std::vector<Role> roles;
      for (const auto& r : j["fixed_role_assignment"]) roles.push_back(RoleFrom(r));
      config.fixed_role_assignment = roles;
    }
    return config;
  } catch (const nlohmann::json::exception& e) {
    throw JsonFormatError(e.what());
  }
}

Json ObservationToJson(const Observation& obs) {
  Json roster = Json::array();
  for (const auto& r : obs.roster) {
    roster.push_back({{"seat", r.seat}, {"name", r.name}, {"alive", r.alive}});
  }
  Json known = Json::array();
  for (const auto& [seat, role] : obs.known_roles) {
    known.push_back({{"seat", seat}, {"role", RoleName(role)}});
  }
  Json events = Json::array();
  for (const auto& e : obs.events) {
    Json ej = EventToJson(e);
    ej.erase("audience");
    events.push_back(std::move(ej));
  }
  return Json{{"seat", obs.seat},
              {"name", obs.name},
              {"role", RoleName(obs.role)},
              {"round", obs.round},
              {"phase", PhaseName(obs.phase)},
              {"debate_turn", obs.debate_turn},
              {"debate_turns", obs.debate_turns},
              {"roster", roster},
              {"known_roles", known},
              {"events", events}};
}

}  // namespace werewolf
