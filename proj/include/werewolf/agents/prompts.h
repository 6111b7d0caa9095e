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

#ifndef WEREWOLF_AGENTS_PROMPTS_H_
#define WEREWOLF_AGENTS_PROMPTS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "werewolf/agents/policy.h"
#include "werewolf/estimation/estimate_matrix.h"
#include "werewolf/game/observation.h"
#include "werewolf/llm/chat.h"

namespace werewolf {

enum class PromptPurpose { kNight, kBid, kSpeak, kVote, kEstimate, kAdapt };

std::string_view PromptPurposeName(PromptPurpose purpose);

// Raw template text by file stem ("bid", "strategy_werewolf_support", ...),
// trailing newlines removed. Throws std::out_of_range for unknown stems.
std::string_view TemplateText(std::string_view stem);

// Replaces every {{key}} with its value. Unknown placeholders throw
// std::invalid_argument so a typo cannot silently reach a model.
std::string RenderTemplate(std::string_view text,
                           const std::map<std::string, std::string>& values);

// The verbatim strategy instruction for a side.
std::string_view StrategyText(Side side, Strategy strategy);
// The verbatim adaptation criteria for a side.
std::string_view AdaptationCriteriaText(Side side);

struct DecodingParams {
  std::string model_name = "gpt-4o-mini-2024-07-18";
  double temperature = 0.7;
  int max_output_tokens = 512;
};

struct PromptBundle {
  std::string system_text;
  std::string role_rules_text;
  std::string history_text;
  std::optional<std::string> strategy_text;
  std::optional<std::string> estimation_injection;
  std::string task_text;
  DecodingParams decoding;

  // Everything after the system message, in assembly order.
  std::string UserText() const;
  ChatRequest ToRequest(std::string request_tag) const;
};

struct PromptInputs {
  PolicyKind kind = PolicyKind::kImplicit;
  PromptPurpose purpose = PromptPurpose::kSpeak;
  std::optional<Strategy> strategy;        // active strategy, if any
  const EstimateMatrix* estimates = nullptr;  // latest own estimate, if any
  std::vector<int> options;                // night / vote candidates
  std::vector<int> estimate_targets;       // rows the model must fill
  DecodingParams decoding;
};

// Deterministic assembly: rules and private facts, dialogue history,
// strategy section (fixed/adaptive kinds, action purposes only), estimation
// injection (kinds that use estimation), then the purpose template.
PromptBundle BuildPrompt(const Observation& obs, const PromptInputs& inputs);

// Compact JSON rendering of an estimate keyed by player name; this exact
// string is what gets injected.
std::string RenderEstimates(const Observation& obs,
                            const EstimateMatrix& estimates);

// One line per visible event, oldest first.
std::string RenderHistory(const Observation& obs);

}  // namespace werewolf

#endif  // WEREWOLF_AGENTS_PROMPTS_H_
