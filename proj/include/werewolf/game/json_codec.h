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

#ifndef WEREWOLF_GAME_JSON_CODEC_H_
#define WEREWOLF_GAME_JSON_CODEC_H_

#include <stdexcept>

#include "json.hpp"
#include "werewolf/game/config.h"
#include "werewolf/game/event.h"
#include "werewolf/game/observation.h"

// JSON mapping of the game vocabulary. Field names are part of the transcript
// and live-server wire formats; see docs/formats.md.
namespace werewolf {

using Json = nlohmann::json;

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json MomentToJson(const AdaptationMoment& moment);
AdaptationMoment MomentFromJson(const Json& j);

Json EventToJson(const Event& event);
// Throws JsonFormatError on unknown kinds or missing fields.
Event EventFromJson(const Json& j);

Json ConfigToJson(const GameConfig& config);
GameConfig ConfigFromJson(const Json& j);

// Observation as sent to a human client. Events are encoded without their
// audience lists.
Json ObservationToJson(const Observation& obs);

}  // namespace werewolf

#endif  // WEREWOLF_GAME_JSON_CODEC_H_
