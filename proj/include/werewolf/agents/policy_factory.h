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

#ifndef WEREWOLF_AGENTS_POLICY_FACTORY_H_
#define WEREWOLF_AGENTS_POLICY_FACTORY_H_

#include <cstdint>
#include <memory>
#include <string>

#include "werewolf/agents/human_policy.h"
#include "werewolf/agents/policy.h"
#include "werewolf/agents/prompts.h"
#include "werewolf/llm/chat.h"

namespace werewolf {

struct PolicyDeps {
  std::shared_ptr<ChatBackend> backend;  // required for language-model kinds
  DecodingParams decoding;
  std::uint64_t seed = 0;
  std::string game_id;
  HumanDecisionSource* human = nullptr;  // required for kHuman
  HumanDeadlines human_deadlines;
};

// Throws std::invalid_argument when a required dependency is missing.
std::unique_ptr<Policy> MakePolicy(PolicyKind kind, int seat,
                                   const PolicyDeps& deps);

}  // namespace werewolf

#endif  // WEREWOLF_AGENTS_POLICY_FACTORY_H_
