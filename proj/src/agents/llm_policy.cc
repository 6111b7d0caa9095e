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

#include "werewolf/agents/llm_policy.h"

#include <algorithm>
#include <vector>

#include "werewolf/agents/parsing.h"

namespace werewolf {

LlmPolicy::LlmPolicy(PolicyKind kind, int seat,
                     std::shared_ptr<ChatBackend> backend,
                     DecodingParams decoding, std::uint64_t seed,
                     std::string game_id)
    : Policy(seat),
      kind_(kind),
      backend_(std::move(backend)),
      decoding_(std::move(decoding)),
      rng_(MixSeed(seed ^ static_cast<std::uint64_t>(seat))),
      game_id_(std::move(game_id)) {
  if (!IsLlmBacked(kind_)) {
    throw std::invalid_argument(std::string(PolicyKindName(kind_)) +
                                " is not a language-model policy");
  }
  if (!backend_) throw std::invalid_argument("LlmPolicy needs a backend");
}

std::optional<Strategy> LlmPolicy::ActiveStrategy() const {
  if (auto fixed = FixedStrategyOf(kind_)) return fixed;
  if (AdaptsStrategy(kind_)) return selected_.value_or(Strategy::kSupport);
  return std::nullopt;
}

PromptInputs LlmPolicy::Inputs(PromptPurpose purpose) const {
  PromptInputs in;
  in.kind = kind_;
  in.purpose = purpose;
  in.strategy = ActiveStrategy();
  in.estimates = latest_ ? &*latest_ : nullptr;
  in.decoding = decoding_;
  return in;
}

std::string LlmPolicy::Tag(const Observation& obs,
                           PromptPurpose purpose) const {
  std::string tag = game_id_ + "/" + std::to_string(seat()) + "/" +
                    std::string(PromptPurposeName(purpose)) + "/r" +
                    std::to_string(obs.round);
  if (purpose == PromptPurpose::kBid || purpose == PromptPurpose::kSpeak) {
    tag += "/t" + std::to_string(obs.debate_turn + 1);
  }
  return tag;
}

std::optional<std::string> LlmPolicy::Ask(const ChatRequest& request) {
  ChatResponse response = backend_->Complete(request);
  if (!response.ok) {
    Notify("backend_failure", request.request_tag + ": " + response.error);
    return std::nullopt;
  }
  return std::move(response.text);
}

std::optional<std::string> LlmPolicy::AskAgain(ChatRequest request,
                                               const std::string& rejected,
                                               const std::string& complaint,
                                               const std::string& reminder) {
  request.messages.push_back({ChatRole::kAssistant, rejected});
  request.messages.push_back(
      {ChatRole::kUser, RenderTemplate(TemplateText("reprompt"),
                                       {{"complaint", complaint},
                                        {"reminder", reminder}})});
  request.request_tag += "/retry";
  return Ask(request);
}

int LlmPolicy::ChooseTarget(const Observation& obs, PromptPurpose purpose,
                            std::span<const int> options,
                            const char* fallback_kind) {
  PromptInputs in = Inputs(purpose);
  in.options.assign(options.begin(), options.end());
  const PromptBundle bundle = BuildPrompt(obs, in);
  const ChatRequest request = bundle.ToRequest(Tag(obs, purpose));
  std::string reminder = "Options: ";
  for (std::size_t i = 0; i < options.size(); ++i) {
    reminder += (i ? ", " : "") + obs.NameOf(options[i]);
  }
  reminder += "\nAnswer with the player's name only.";

  std::optional<std::string> reply = Ask(request);
  if (reply) {
    if (auto seat = ParseTargetAnswer(obs, *reply, options)) return *seat;
    reply = AskAgain(request, *reply,
                     "it does not name exactly one of the options", reminder);
    if (reply) {
      if (auto seat = ParseTargetAnswer(obs, *reply, options)) return *seat;
    }
  }
  const int pick = rng_.Pick(options);
  Notify(fallback_kind, "random legal target " + obs.NameOf(pick));
  return pick;
}

int LlmPolicy::DecideNightAction(const Observation& obs,
                                 std::span<const int> legal) {
  if (legal.empty()) throw std::logic_error("no legal night target");
  return ChooseTarget(obs, PromptPurpose::kNight, legal, "night_fallback");
}

int LlmPolicy::Vote(const Observation& obs) {
  const std::vector<int> options = obs.AliveOthers();
  if (options.empty()) throw std::logic_error("no legal vote target");
  return ChooseTarget(obs, PromptPurpose::kVote, options, "vote_fallback");
}

int LlmPolicy::Bid(const Observation& obs) {
  const PromptBundle bundle = BuildPrompt(obs, Inputs(PromptPurpose::kBid));
  const std::optional<std::string> reply =
      Ask(bundle.ToRequest(Tag(obs, PromptPurpose::kBid)));
  if (!reply) {
    Notify("bid_fallback", "no reply; bidding 0");
    return 0;
  }
  const BidParse bid = ParseBidAnswer(*reply);
  if (!bid.parsed) {
    Notify("bid_unparseable", "'" + reply->substr(0, 80) + "'; bidding 0");
  } else if (bid.clamped) {
    Notify("bid_clamped", "'" + reply->substr(0, 80) + "' clamped to " +
                              std::to_string(bid.value));
  }
  return bid.value;
}

std::string LlmPolicy::Speak(const Observation& obs) {
  const PromptBundle bundle = BuildPrompt(obs, Inputs(PromptPurpose::kSpeak));
  std::optional<std::string> reply =
      Ask(bundle.ToRequest(Tag(obs, PromptPurpose::kSpeak)));
  const std::string text = reply ? CollapseWhitespace(*reply) : "";
  if (text.empty()) {
    Notify("speak_fallback", "empty or failed reply");
    return obs.name + " passes.";
  }
  return text;
}

EstimateMatrix LlmPolicy::EstimateRoles(const Observation& obs,
                                        AdaptationMoment moment,
                                        bool measurement_only) {
  EstimateMatrix m;
  m.observer = seat();
  m.moment = moment;
  m.measurement_only = measurement_only;
  std::vector<int> targets;
  for (int other : obs.AliveOthers()) {
    if (auto role = obs.KnownRole(other)) {
      m.scores[other] = RoleScores::Certain(*role);
      m.known_targets.insert(other);
    } else {
      targets.push_back(other);
    }
  }

  if (!targets.empty()) {
    PromptInputs in = Inputs(PromptPurpose::kEstimate);
    in.estimate_targets = targets;
    const PromptBundle bundle = BuildPrompt(obs, in);
    const ChatRequest request =
        bundle.ToRequest(Tag(obs, PromptPurpose::kEstimate));
    std::optional<ParsedEstimates> parsed;
    std::optional<std::string> reply = Ask(request);
    if (reply) {
      auto result = ParseEstimateAnswer(obs, *reply, targets);
      if (auto* ok = std::get_if<ParsedEstimates>(&result)) {
        parsed = std::move(*ok);
      } else {
        reply = AskAgain(request, *reply, std::get<std::string>(result),
                         "Answer with the JSON object only.");
        if (reply) {
          auto second = ParseEstimateAnswer(obs, *reply, targets);
          if (auto* ok2 = std::get_if<ParsedEstimates>(&second)) {
            parsed = std::move(*ok2);
          }
        }
      }
    }
    if (parsed) {
      for (auto& [target, row] : parsed->rows) m.scores[target] = row;
      m.reasoning = std::move(parsed->reasoning);
    } else {
      for (int target : targets) m.scores[target] = RoleScores::Uniform();
      m.fallback = true;
      Notify("estimate_fallback", "uniform rows for " +
                                      std::to_string(targets.size()) +
                                      " players");
    }
  }
  // Measurement passes never feed back into this policy's prompts.
  if (!measurement_only) latest_ = m;
  return m;
}

StrategyChoice LlmPolicy::DecideStrategy(const Observation& obs,
                                         AdaptationMoment moment) {
  if (!AdaptsStrategy(kind_)) return Policy::DecideStrategy(obs, moment);
  StrategyChoice choice;
  choice.player = seat();
  choice.moment = moment;

  const PromptBundle bundle = BuildPrompt(obs, Inputs(PromptPurpose::kAdapt));
  const ChatRequest request = bundle.ToRequest(Tag(obs, PromptPurpose::kAdapt));
  std::optional<std::string> reply = Ask(request);
  std::optional<Strategy> label;
  if (reply) {
    label = ParseStrategyAnswer(*reply);
    if (!label) {
      reply = AskAgain(request, *reply,
                       "it must name exactly one of Support or Attack",
                       std::string(TemplateText("adaptation_answer")));
      if (reply) label = ParseStrategyAnswer(*reply);
    }
  }
  if (label) {
    choice.strategy = *label;
    choice.rationale = ParseRationale(*reply);
  } else {
    choice.strategy = Strategy::kSupport;
    choice.rationale = "fallback";
    choice.fallback = true;
    Notify("strategy_fallback", "no usable label; defaulting to support");
  }
  selected_ = choice.strategy;
  return choice;
}

}  // namespace werewolf
