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

#include "werewolf/server/protocol.h"

#include "werewolf/game/errors.h"
#include "werewolf/game/json_codec.h"

namespace werewolf {

namespace {

using nlohmann::json;

PolicyKind PolicyField(const json& body, const char* key, PolicyKind fallback) {
  if (!body.contains(key)) return fallback;
  if (!body[key].is_string()) {
    throw RequestError(400, std::string(key) + " must be a string");
  }
  const std::string name = body[key].get<std::string>();
  auto kind = ParsePolicyKind(name);
  if (!kind) throw RequestError(400, "unknown policy '" + name + "'");
  return *kind;
}

json TargetList(const DecisionRequest& request) {
  json targets = json::array();
  for (int seat : request.legal_targets) {
    json t{{"seat", seat}};
    if (request.observation != nullptr) {
      t["name"] = request.observation->NameOf(seat);
    }
    targets.push_back(t);
  }
  return targets;
}

json RosterJson(const Observation& obs) {
  json roster = json::array();
  for (const RosterEntry& r : obs.roster) {
    roster.push_back({{"seat", r.seat}, {"name", r.name}, {"alive", r.alive}});
  }
  return roster;
}

}  // namespace

GameSpec ParseGameSpec(const json& body) {
  if (!body.is_object()) throw RequestError(400, "body must be a JSON object");
  GameSpec spec;
  try {
    if (body.contains("config")) spec.config = ConfigFromJson(body["config"]);
    if (body.contains("seed")) spec.config.seed = body["seed"].get<std::uint64_t>();
    ValidateConfig(spec.config);
  } catch (const JsonFormatError& e) {
    throw RequestError(400, std::string("bad config: ") + e.what());
  } catch (const ConfigError& e) {
    throw RequestError(400, std::string("bad config: ") + e.what());
  } catch (const json::exception& e) {
    throw RequestError(400, std::string("bad config: ") + e.what());
  }
  spec.villager_policy = PolicyField(body, "villager_policy", spec.villager_policy);
  spec.werewolf_policy = PolicyField(body, "werewolf_policy", spec.werewolf_policy);
  if (spec.villager_policy == PolicyKind::kHuman ||
      spec.werewolf_policy == PolicyKind::kHuman) {
    throw RequestError(400, "human seats are assigned per seat, not per side");
  }
  const int n = spec.config.num_players();
  if (body.contains("seats")) {
    if (!body["seats"].is_object()) {
      throw RequestError(400, "seats must map seat numbers to policies");
    }
    for (const auto& [key, value] : body["seats"].items()) {
      int seat = -1;
      try {
        std::size_t used = 0;
        seat = std::stoi(key, &used);
        if (used != key.size()) seat = -1;
      } catch (const std::exception&) {
        seat = -1;
      }
      if (seat < 0 || seat >= n) throw RequestError(400, "bad seat '" + key + "'");
      if (!value.is_string()) throw RequestError(400, "seat policy must be a string");
      auto kind = ParsePolicyKind(value.get<std::string>());
      if (!kind) {
        throw RequestError(400, "unknown policy '" + value.get<std::string>() + "'");
      }
      spec.seat_overrides[seat] = *kind;
      if (*kind == PolicyKind::kHuman) {
        if (spec.human_seat) throw RequestError(400, "at most one human seat per game");
        spec.human_seat = seat;
      }
    }
  }
  if (body.contains("deadlines_ms")) {
    const json& d = body["deadlines_ms"];
    if (!d.is_object()) throw RequestError(400, "deadlines_ms must be an object");
    for (const auto& [key, value] : d.items()) {
      auto kind = ParseDecisionKind(key);
      if (!kind || !value.is_number_integer() || value.get<long long>() < 1) {
        throw RequestError(400, "bad deadline '" + key + "'");
      }
      const std::chrono::milliseconds ms{value.get<long long>()};
      switch (*kind) {
        case DecisionKind::kNight: spec.deadlines.night = ms; break;
        case DecisionKind::kBid: spec.deadlines.bid = ms; break;
        case DecisionKind::kSpeak: spec.deadlines.speak = ms; break;
        case DecisionKind::kVote: spec.deadlines.vote = ms; break;
      }
    }
  }
  return spec;
}

json HelloMessage(const std::string& game_id, const std::string& mode) {
  return {{"type", "hello"},
          {"protocol", kProtocolVersion},
          {"game_id", game_id},
          {"mode", mode}};
}

json SeatAssignedMessage(const Observation& obs) {
  return {{"type", "seat_assigned"},
          {"seat", obs.seat},
          {"name", obs.name},
          {"role", RoleName(obs.role)}};
}

json ObservationMessage(const Observation& obs, const Event* event) {
  json known = json::object();
  for (const auto& [seat, role] : obs.known_roles) {
    known[std::to_string(seat)] = RoleName(role);
  }
  json msg{{"type", "observation"},
           {"seat", obs.seat},
           {"round", obs.round},
           {"phase", PhaseName(obs.phase)},
           {"debate_turn", obs.debate_turn},
           {"roster", RosterJson(obs)},
           {"known_roles", known}};
  if (event != nullptr) msg["event"] = EventToJson(*event);
  return msg;
}

json DecisionRequestMessage(const std::string& id,
                            const DecisionRequest& request) {
  json msg{{"type", "decision_request"},
           {"id", id},
           {"kind", DecisionKindName(request.kind)},
           {"seat", request.seat},
           {"deadline_ms", request.deadline.count()}};
  if (request.kind == DecisionKind::kNight || request.kind == DecisionKind::kVote) {
    msg["legal_targets"] = TargetList(request);
  }
  if (request.kind == DecisionKind::kBid) {
    msg["min_bid"] = 0;
    msg["max_bid"] = 4;
  }
  return msg;
}

json RejectedMessage(const std::string& id, const std::string& reason,
                     const DecisionRequest& request) {
  json msg{{"type", "rejected"}, {"id", id}, {"reason", reason}};
  if (request.kind == DecisionKind::kNight || request.kind == DecisionKind::kVote) {
    msg["legal_targets"] = TargetList(request);
  }
  return msg;
}

json AckMessage(const std::string& id, const std::string& status,
                const std::string& reason) {
  json msg{{"type", "ack"}, {"id", id}, {"status", status}};
  if (!reason.empty()) msg["reason"] = reason;
  return msg;
}

json DecisionTimeoutMessage(const std::string& id) {
  return {{"type", "decision_timeout"}, {"id", id}};
}

json ErrorMessage(const std::string& message) {
  return {{"type", "error"}, {"message", message}};
}

json SpectatorEventMessage(const Event& event, const EstimateMatrix* snapshot) {
  json msg{{"type", "event"}, {"event", EventToJson(event)}};
  if (snapshot != nullptr) {
    json rows = json::array();
    for (const auto& [target, scores] : snapshot->scores) {
      json row{{"target", target}};
      for (Role role : kAllRoles) row[std::string(RoleName(role))] = scores[role];
      rows.push_back(row);
    }
    msg["estimates"] = {{"observer", snapshot->observer},
                        {"fallback", snapshot->fallback},
                        {"rows", rows}};
  }
  return msg;
}

json GameOverMessage(const std::optional<Side>& winner, bool truncated,
                     int rounds_played, const std::string& error) {
  json msg{{"type", "game_over"},
           {"winner", winner ? json(SideName(*winner)) : json(nullptr)},
           {"truncated", truncated},
           {"rounds_played", rounds_played}};
  if (!error.empty()) msg["error"] = error;
  return msg;
}

bool SpectatorSees(const Event& event, bool debug) {
  if (event.visibility == Visibility::kPublic) return true;
  if (!debug) return false;
  return std::holds_alternative<StrategySelected>(event.body) ||
         std::holds_alternative<EstimationSnapshot>(event.body);
}

bool PlayerSees(const Event& event, int seat) {
  if (std::holds_alternative<StrategySelected>(event.body) ||
      std::holds_alternative<EstimationSnapshot>(event.body) ||
      std::holds_alternative<PolicyNotice>(event.body)) {
    return false;
  }
  return event.VisibleTo(seat);
}

}  // namespace werewolf
