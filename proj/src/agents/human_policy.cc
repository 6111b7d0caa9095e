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

#include "werewolf/agents/human_policy.h"

#include <algorithm>

#include "werewolf/agents/scripted_policy.h"

namespace werewolf {

namespace {

using Json = nlohmann::json;

std::optional<int> TargetOf(const Observation& obs, const Json& payload) {
  if (!payload.is_object() || !payload.contains("target")) return std::nullopt;
  const Json& t = payload["target"];
  if (t.is_number_integer()) return t.get<int>();
  if (t.is_string()) return obs.SeatOf(t.get<std::string>());
  return std::nullopt;
}

}  // namespace

std::string_view DecisionKindName(DecisionKind kind) {
  switch (kind) {
    case DecisionKind::kNight:
      return "night";
    case DecisionKind::kBid:
      return "bid";
    case DecisionKind::kSpeak:
      return "speak";
    case DecisionKind::kVote:
      return "vote";
  }
  return "unknown";
}

std::optional<DecisionKind> ParseDecisionKind(std::string_view name) {
  for (DecisionKind k : {DecisionKind::kNight, DecisionKind::kBid,
                         DecisionKind::kSpeak, DecisionKind::kVote}) {
    if (DecisionKindName(k) == name) return k;
  }
  return std::nullopt;
}

DecisionValidator MakeDecisionValidator(const DecisionRequest& request) {
  return [request](const Json& payload) -> std::optional<std::string> {
    if (!payload.is_object()) return "decision payload must be an object";
    switch (request.kind) {
      case DecisionKind::kNight:
      case DecisionKind::kVote: {
        const auto seat = TargetOf(*request.observation, payload);
        const auto& legal = request.legal_targets;
        if (!seat || std::find(legal.begin(), legal.end(), *seat) == legal.end()) {
          return "target is not one of the legal targets";
        }
        return std::nullopt;
      }
      case DecisionKind::kBid: {
        const Json* bid = payload.contains("bid") ? &payload["bid"] : nullptr;
        if (bid == nullptr || !bid->is_number_integer() ||
            bid->get<int>() < 0 || bid->get<int>() > 4) {
          return "bid must be an integer from 0 to 4";
        }
        return std::nullopt;
      }
      case DecisionKind::kSpeak: {
        const Json* text = payload.contains("text") ? &payload["text"] : nullptr;
        if (text == nullptr || !text->is_string() ||
            text->get<std::string>().find_first_not_of(" \t\r\n") ==
                std::string::npos) {
          return "text must be a non-empty string";
        }
        return std::nullopt;
      }
    }
    return "unknown decision kind";
  };
}

std::optional<Json> HumanPolicy::Ask(DecisionRequest request) {
  request.seat = seat();
  const DecisionValidator validate = MakeDecisionValidator(request);
  std::optional<Json> payload = source_.Await(request, validate);
  // The source promises validated payloads; check anyway so a faulty source
  // can never push an illegal action into the engine.
  if (payload && validate(*payload)) payload.reset();
  if (!payload) {
    Notify("human_timeout", std::string(DecisionKindName(request.kind)) +
                                ": scripted rule substituted");
  }
  return payload;
}

int HumanPolicy::DecideNightAction(const Observation& obs,
                                   std::span<const int> legal) {
  DecisionRequest request{DecisionKind::kNight, seat(), &obs,
                          {legal.begin(), legal.end()}, deadlines_.night};
  if (auto payload = Ask(request)) return *TargetOf(obs, *payload);
  return ScriptedNightTarget(obs, legal);
}

int HumanPolicy::Bid(const Observation& obs) {
  DecisionRequest request{DecisionKind::kBid, seat(), &obs, {}, deadlines_.bid};
  if (auto payload = Ask(request)) return (*payload)["bid"].get<int>();
  return ScriptedBid(obs);
}

std::string HumanPolicy::Speak(const Observation& obs) {
  DecisionRequest request{DecisionKind::kSpeak, seat(), &obs, {},
                          deadlines_.speak};
  if (auto payload = Ask(request)) return (*payload)["text"].get<std::string>();
  return ScriptedUtterance(obs);
}

int HumanPolicy::Vote(const Observation& obs) {
  DecisionRequest request{DecisionKind::kVote, seat(), &obs, obs.AliveOthers(),
                          deadlines_.vote};
  if (auto payload = Ask(request)) return *TargetOf(obs, *payload);
  return ScriptedVote(obs);
}

}  // namespace werewolf
