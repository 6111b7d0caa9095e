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

#include "werewolf/agents/policy.h"

#include <array>
#include <stdexcept>
#include <utility>

namespace werewolf {

namespace {

constexpr std::array<std::pair<PolicyKind, std::string_view>, 8> kKindNames = {{
    {PolicyKind::kImplicit, "implicit"},
    {PolicyKind::kFixedSupport, "fixed_support"},
    {PolicyKind::kFixedAttack, "fixed_attack"},
    {PolicyKind::kAdaptive, "adaptive"},
    {PolicyKind::kAdaptiveWithoutEstimation, "adaptive_without_estimation"},
    {PolicyKind::kEstimationOnly, "estimation_only"},
    {PolicyKind::kScripted, "scripted"},
    {PolicyKind::kHuman, "human"},
}};

}  // namespace

std::string_view PolicyKindName(PolicyKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<PolicyKind> ParsePolicyKind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool IsLlmBacked(PolicyKind kind) {
  return kind != PolicyKind::kScripted && kind != PolicyKind::kHuman;
}

bool UsesEstimation(PolicyKind kind) {
  return kind == PolicyKind::kAdaptive || kind == PolicyKind::kEstimationOnly;
}

bool AdaptsStrategy(PolicyKind kind) {
  return kind == PolicyKind::kAdaptive ||
         kind == PolicyKind::kAdaptiveWithoutEstimation;
}

std::optional<Strategy> FixedStrategyOf(PolicyKind kind) {
  if (kind == PolicyKind::kFixedSupport) return Strategy::kSupport;
  if (kind == PolicyKind::kFixedAttack) return Strategy::kAttack;
  return std::nullopt;
}

EstimateMatrix Policy::EstimateRoles(const Observation&, AdaptationMoment,
                                     bool) {
  throw std::logic_error(std::string(PolicyKindName(kind())) +
                         " policy does not estimate roles");
}

StrategyChoice Policy::DecideStrategy(const Observation&, AdaptationMoment) {
  throw std::logic_error(std::string(PolicyKindName(kind())) +
                         " policy does not select strategies");
}

std::vector<PolicyNoticeRecord> Policy::TakeNotices() {
  return std::exchange(notices_, {});
}

void Policy::Notify(std::string kind, std::string detail) {
  notices_.push_back({std::move(kind), std::move(detail)});
}

}  // namespace werewolf
