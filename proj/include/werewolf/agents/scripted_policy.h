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

#ifndef WEREWOLF_AGENTS_SCRIPTED_POLICY_H_
#define WEREWOLF_AGENTS_SCRIPTED_POLICY_H_

#include <span>
#include <string>

#include "werewolf/agents/policy.h"

namespace werewolf {

// The fixed rules, usable on their own as fallbacks:
//   night: werewolf kills the lowest legal target; doctor protects itself
//          (else the lowest legal target); seer investigates the lowest
//          legal target it has not yet investigated.
//   bid:   villager 0, doctor 0, seer 2, werewolf 1.
//   vote:  seer votes the lowest alive known werewolf; werewolf votes the
//          lowest alive non-teammate; otherwise the lowest alive other.
int ScriptedNightTarget(const Observation& obs, std::span<const int> legal);
int ScriptedBid(const Observation& obs);
std::string ScriptedUtterance(const Observation& obs);
int ScriptedVote(const Observation& obs);

class ScriptedPolicy : public Policy {
 public:
  explicit ScriptedPolicy(int seat) : Policy(seat) {}

  PolicyKind kind() const override { return PolicyKind::kScripted; }
  int DecideNightAction(const Observation& obs,
                        std::span<const int> legal) override {
    return ScriptedNightTarget(obs, legal);
  }
  int Bid(const Observation& obs) override { return ScriptedBid(obs); }
  std::string Speak(const Observation& obs) override {
    return ScriptedUtterance(obs);
  }
  int Vote(const Observation& obs) override { return ScriptedVote(obs); }
};

}  // namespace werewolf

#endif  // WEREWOLF_AGENTS_SCRIPTED_POLICY_H_
