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

#ifndef WEREWOLF_SERVER_PROTOCOL_H_
#define WEREWOLF_SERVER_PROTOCOL_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "werewolf/agents/human_policy.h"
#include "werewolf/estimation/estimate_matrix.h"
#include "werewolf/game/config.h"
#include "werewolf/game/event.h"
#include "werewolf/game/observation.h"

namespace werewolf {

// Wire schema version carried by every "hello" message.
inline constexpr char kProtocolVersion[] = "werewolf.live/1";

// A client request the server refuses; maps to a 4xx status.
class RequestError : public std::runtime_error {
 public:
  RequestError(int status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

// Body of POST /games.
struct GameSpec {
  GameConfig config;
  PolicyKind villager_policy = PolicyKind::kScripted;
  PolicyKind werewolf_policy = PolicyKind::kScripted;
  std::map<int, PolicyKind> seat_overrides;
  std::optional<int> human_seat;  // derived: at most one seat plays kHuman
  HumanDeadlines deadlines;
};

// Throws RequestError(400) for anything malformed, including more than one
// human seat.
GameSpec ParseGameSpec(const nlohmann::json& body);

// Server -> client messages. Each is one JSON text frame.
nlohmann::json HelloMessage(const std::string& game_id, const std::string& mode);
nlohmann::json SeatAssignedMessage(const Observation& obs);
// The player's view after `event`; `event` is omitted for the initial view.
nlohmann::json ObservationMessage(const Observation& obs, const Event* event);
nlohmann::json DecisionRequestMessage(const std::string& id,
                                      const DecisionRequest& request);
nlohmann::json RejectedMessage(const std::string& id, const std::string& reason,
                               const DecisionRequest& request);
nlohmann::json AckMessage(const std::string& id, const std::string& status,
                          const std::string& reason = "");
nlohmann::json DecisionTimeoutMessage(const std::string& id);
nlohmann::json ErrorMessage(const std::string& message);
// Spectator stream entry; `snapshot` accompanies estimation snapshots on the
// debug stream.
nlohmann::json SpectatorEventMessage(const Event& event,
                                     const EstimateMatrix* snapshot);
nlohmann::json GameOverMessage(const std::optional<Side>& winner,
                               bool truncated, int rounds_played,
                               const std::string& error);

// Which events a spectator may see: public ones, plus strategy choices and
// estimation snapshots on the debug stream.
bool SpectatorSees(const Event& event, bool debug);
// Which events a human player may see: public ones and private ones
// addressed to the seat. Agent bookkeeping is never sent.
bool PlayerSees(const Event& event, int seat);

}  // namespace werewolf

#endif  // WEREWOLF_SERVER_PROTOCOL_H_
