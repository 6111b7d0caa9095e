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

#ifndef WEREWOLF_AGENTS_POLICY_H_
#define WEREWOLF_AGENTS_POLICY_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "werewolf/estimation/estimate_matrix.h"
#include "werewolf/game/event.h"
#include "werewolf/game/observation.h"

namespace werewolf {

enum class PolicyKind {
  kImplicit,
  kFixedSupport,
  kFixedAttack,
  kAdaptive,                   // strategy adaptation with role estimation
  kAdaptiveWithoutEstimation,  // ablation: adaptation only
  kEstimationOnly,             // ablation: estimation only
  kScripted,
  kHuman,
};

std::string_view PolicyKindName(PolicyKind kind);
std::optional<PolicyKind> ParsePolicyKind(std::string_view name);

bool IsLlmBacked(PolicyKind kind);
bool UsesEstimation(PolicyKind kind);  // estimates are injected into prompts
bool AdaptsStrategy(PolicyKind kind);
std::optional<Strategy> FixedStrategyOf(PolicyKind kind);

struct StrategyChoice {
  int player = 0;
  AdaptationMoment moment;
  Strategy strategy = Strategy::kSupport;
  std::string rationale;
  bool fallback = false;
};

struct PolicyNoticeRecord {
  std::string kind;  // "night_fallback", "bid_unparseable", ...
  std::string detail;
};

// One seat's decision maker for one match. Every decision returned is legal
// for the engine regardless of what any backend produced; anything that had
// to be repaired is reported through TakeNotices().
class Policy {
 public:
  explicit Policy(int seat) : seat_(seat) {}
  virtual ~Policy() = default;
  Policy(const Policy&) = delete;
  Policy& operator=(const Policy&) = delete;

  virtual PolicyKind kind() const = 0;
  int seat() const { return seat_; }

  // `legal` is non-empty and sorted.
  virtual int DecideNightAction(const Observation& obs,
                                std::span<const int> legal) = 0;
  // In [0, 4].
  virtual int Bid(const Observation& obs) = 0;
  // Non-empty.
  virtual std::string Speak(const Observation& obs) = 0;
  // An alive seat other than this one.
  virtual int Vote(const Observation& obs) = 0;

  // Whether this seat yields estimation snapshots (as policy input or for
  // measurement only).
  virtual bool ProducesEstimates() const { return false; }
  // Rows cover every alive player except this seat. When measurement_only is
  // set the result never feeds back into this policy's prompts.
  virtual EstimateMatrix EstimateRoles(const Observation& obs,
                                       AdaptationMoment moment,
                                       bool measurement_only);

  virtual bool SelectsStrategy() const { return false; }
  virtual StrategyChoice DecideStrategy(const Observation& obs,
                                        AdaptationMoment moment);
  virtual std::optional<Strategy> ActiveStrategy() const {
    return std::nullopt;
  }

  std::vector<PolicyNoticeRecord> TakeNotices();

 protected:
  void Notify(std::string kind, std::string detail);

 private:
  int seat_;
  std::vector<PolicyNoticeRecord> notices_;
};

}  // namespace werewolf

#endif  // WEREWOLF_AGENTS_POLICY_H_
