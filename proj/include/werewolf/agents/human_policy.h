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

#ifndef WEREWOLF_AGENTS_HUMAN_POLICY_H_
#define WEREWOLF_AGENTS_HUMAN_POLICY_H_

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "werewolf/agents/policy.h"

namespace werewolf {

enum class DecisionKind { kNight, kBid, kSpeak, kVote };

std::string_view DecisionKindName(DecisionKind kind);
std::optional<DecisionKind> ParseDecisionKind(std::string_view name);

struct DecisionRequest {
  DecisionKind kind = DecisionKind::kVote;
  int seat = 0;
  const Observation* observation = nullptr;
  std::vector<int> legal_targets;  // night / vote only
  std::chrono::milliseconds deadline{120'000};
};

// Checks a decision payload; returns an error message, or nullopt if usable.
//   night, vote: {"target": <seat>} or {"target": "<name>"}
//   bid:         {"bid": 0..4}
//   speak:       {"text": "<non-empty>"}
using DecisionValidator =
    std::function<std::optional<std::string>(const nlohmann::json&)>;

// Where a human seat's decisions come from (the live server session).
class HumanDecisionSource {
 public:
  virtual ~HumanDecisionSource() = default;
  // Blocks until a payload passing `validate` arrives, or returns nullopt on
  // deadline expiry or disconnect. Rejected payloads are reported back to the
  // human by the source and do not end the wait.
  virtual std::optional<nlohmann::json> Await(
      const DecisionRequest& request, const DecisionValidator& validate) = 0;
};

DecisionValidator MakeDecisionValidator(const DecisionRequest& request);

struct HumanDeadlines {
  std::chrono::milliseconds night{120'000};
  std::chrono::milliseconds bid{120'000};
  std::chrono::milliseconds speak{120'000};
  std::chrono::milliseconds vote{120'000};
};

// Defers every decision to a HumanDecisionSource; on timeout, disconnect or
// an unusable payload the scripted rule for the role acts instead.
class HumanPolicy : public Policy {
 public:
  HumanPolicy(int seat, HumanDecisionSource& source,
              HumanDeadlines deadlines = {})
      : Policy(seat), source_(source), deadlines_(deadlines) {}

  PolicyKind kind() const override { return PolicyKind::kHuman; }
  int DecideNightAction(const Observation& obs,
                        std::span<const int> legal) override;
  int Bid(const Observation& obs) override;
  std::string Speak(const Observation& obs) override;
  int Vote(const Observation& obs) override;

 private:
  std::optional<nlohmann::json> Ask(DecisionRequest request);

  HumanDecisionSource& source_;
  HumanDeadlines deadlines_;
};

}  // namespace werewolf

#endif  // WEREWOLF_AGENTS_HUMAN_POLICY_H_
