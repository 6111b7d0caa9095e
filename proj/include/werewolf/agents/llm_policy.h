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

#ifndef WEREWOLF_AGENTS_LLM_POLICY_H_
#define WEREWOLF_AGENTS_LLM_POLICY_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "werewolf/agents/policy.h"
#include "werewolf/agents/prompts.h"
#include "werewolf/game/rng.h"
#include "werewolf/llm/chat.h"

namespace werewolf {

// Every language-model-driven kind: Implicit, FixedSupport/Attack, Adaptive
// and the two ablations. Malformed output gets one re-prompt, then a logged
// fallback that is always legal.
class LlmPolicy : public Policy {
 public:
  // `seed` drives the random fallbacks; `game_id` only labels requests.
  LlmPolicy(PolicyKind kind, int seat, std::shared_ptr<ChatBackend> backend,
            DecodingParams decoding, std::uint64_t seed, std::string game_id);

  PolicyKind kind() const override { return kind_; }
  int DecideNightAction(const Observation& obs,
                        std::span<const int> legal) override;
  int Bid(const Observation& obs) override;
  std::string Speak(const Observation& obs) override;
  int Vote(const Observation& obs) override;

  bool ProducesEstimates() const override { return true; }
  EstimateMatrix EstimateRoles(const Observation& obs, AdaptationMoment moment,
                               bool measurement_only) override;

  bool SelectsStrategy() const override { return AdaptsStrategy(kind_); }
  StrategyChoice DecideStrategy(const Observation& obs,
                                AdaptationMoment moment) override;
  // Fixed kinds: their strategy. Adaptive kinds: the latest selection,
  // Support before the first one.
  std::optional<Strategy> ActiveStrategy() const override;

  const std::optional<EstimateMatrix>& latest_estimates() const {
    return latest_;
  }

 private:
  PromptInputs Inputs(PromptPurpose purpose) const;
  std::string Tag(const Observation& obs, PromptPurpose purpose) const;
  // Sends the prompt; on a declared failure returns nullopt.
  std::optional<std::string> Ask(const ChatRequest& request);
  // One re-prompt carrying the complaint and the rejected reply.
  std::optional<std::string> AskAgain(ChatRequest request,
                                      const std::string& rejected,
                                      const std::string& complaint,
                                      const std::string& reminder);
  int ChooseTarget(const Observation& obs, PromptPurpose purpose,
                   std::span<const int> options, const char* fallback_kind);

  PolicyKind kind_;
  std::shared_ptr<ChatBackend> backend_;
  DecodingParams decoding_;
  MatchRng rng_;
  std::string game_id_;
  std::optional<Strategy> selected_;
  std::optional<EstimateMatrix> latest_;
};

}  // namespace werewolf

#endif  // WEREWOLF_AGENTS_LLM_POLICY_H_
