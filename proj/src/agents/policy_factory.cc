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

#include "werewolf/agents/policy_factory.h"

#include <stdexcept>

#include "werewolf/agents/llm_policy.h"
#include "werewolf/agents/scripted_policy.h"

namespace werewolf {

std::unique_ptr<Policy> MakePolicy(PolicyKind kind, int seat,
                                   const PolicyDeps& deps) {
  switch (kind) {
    case PolicyKind::kScripted:
      return std::make_unique<ScriptedPolicy>(seat);
    case PolicyKind::kHuman:
      if (deps.human == nullptr) {
        throw std::invalid_argument("human seat without a decision source");
      }
      return std::make_unique<HumanPolicy>(seat, *deps.human,
                                           deps.human_deadlines);
    default:
      return std::make_unique<LlmPolicy>(kind, seat, deps.backend,
                                         deps.decoding, deps.seed,
                                         deps.game_id);
  }
}

}  // namespace werewolf
