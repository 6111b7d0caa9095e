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

#include "werewolf/agents/prompts.h"

#include <stdexcept>

#include "json.hpp"
#include "werewolf/game/role.h"

namespace werewolf {

namespace prompt_data {
const std::map<std::string, std::string_view, std::less<>>& Templates();
}  // namespace prompt_data

namespace {

std::string JoinNames(const Observation& obs, const std::vector<int>& seats) {
  std::string out;
  for (std::size_t i = 0; i < seats.size(); ++i) {
    if (i > 0) out += ", ";
    out += obs.NameOf(seats[i]);
  }
  return out;
}

std::string RoleCensus(const RoleCounts& counts) {
  std::string out;
  for (Role role : kAllRoles) {
    if (counts[role] == 0) continue;
    if (!out.empty()) out += ", ";
    out += std::to_string(counts[role]) + " " +
           std::string(RoleDisplayName(role));
  }
  return out;
}

std::string PrivateFacts(const Observation& obs) {
  std::string out;
  if (obs.role == Role::kWerewolf) {
    const std::vector<int> mates = obs.Teammates();
    out += mates.empty() ? "You have no Werewolf teammates."
                         : "Your Werewolf teammates: " + JoinNames(obs, mates) +
                               ".";
  }
  if (obs.role == Role::kSeer) {
    std::string found;
    for (const auto& [seat, role] : obs.known_roles) {
      if (seat == obs.seat) continue;
      if (!found.empty()) found += " ";
      found += obs.NameOf(seat) + " is a " + std::string(RoleDisplayName(role)) +
               ".";
    }
    out += found.empty() ? "You have not investigated anyone yet."
                         : "Your investigations: " + found;
  }
  if (obs.role == Role::kDoctor) {
    out += obs.doctor_may_self_save ? "You may protect yourself."
                                    : "You may not protect yourself.";
  }
  return out;
}

std::string Line(const Observation& obs, const Event& e) {
  const std::string round = std::to_string(e.round);
  return std::visit(
      [&](const auto& b) -> std::string {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, NightDeathAnnounced>) {
          return "Night " + round + ": " + obs.NameOf(b.victim) +
                 " was killed by the Werewolves.";
        } else if constexpr (std::is_same_v<T, NoDeathAnnounced>) {
          return "Night " + round + ": nobody died.";
        } else if constexpr (std::is_same_v<T, WerewolfKillChosen>) {
          return "Night " + round + ": the Werewolves chose to attack " +
                 obs.NameOf(b.target) + ".";
        } else if constexpr (std::is_same_v<T, DoctorProtected>) {
          return "Night " + round + ": you protected " + obs.NameOf(b.target) +
                 ".";
        } else if constexpr (std::is_same_v<T, SeerResult>) {
          return "Night " + round + ": you learned that " +
                 obs.NameOf(b.target) + " is a " +
                 std::string(RoleDisplayName(b.role)) + ".";
        } else if constexpr (std::is_same_v<T, DebateUtterance>) {
          return "Day " + round + ", " + obs.NameOf(b.speaker) + ": " + b.text;
        } else if constexpr (std::is_same_v<T, DebateTurnSkipped>) {
          return "Day " + round + ": nobody wanted to speak.";
        } else if constexpr (std::is_same_v<T, VoteCast>) {
          return "Day " + round + ": " + obs.NameOf(b.voter) + " voted for " +
                 obs.NameOf(b.target) + ".";
        } else if constexpr (std::is_same_v<T, Eliminated>) {
          std::string s =
              "Day " + round + ": " + obs.NameOf(b.target) + " was eliminated";
          if (b.revealed_role) {
            s += " and was a " + std::string(RoleDisplayName(*b.revealed_role));
          }
          return s + ".";
        } else if constexpr (std::is_same_v<T, GameEnded>) {
          return "The game is over.";
        } else {
          return "";  // agent bookkeeping never enters the dialogue history
        }
      },
      e.body);
}

std::string TaskText(const Observation& obs, const PromptInputs& in) {
  const std::string round = std::to_string(obs.round);
  const std::string turn = std::to_string(obs.debate_turn + 1);
  const std::string turns = std::to_string(obs.debate_turns);
  switch (in.purpose) {
    case PromptPurpose::kNight: {
      std::string stem = "night_werewolf";
      if (obs.role == Role::kSeer) stem = "night_seer";
      if (obs.role == Role::kDoctor) stem = "night_doctor";
      return RenderTemplate(TemplateText(stem),
                            {{"round", round},
                             {"options", JoinNames(obs, in.options)}});
    }
    case PromptPurpose::kBid:
      return RenderTemplate(
          TemplateText("bid"),
          {{"round", round}, {"turn", turn}, {"debate_turns", turns}});
    case PromptPurpose::kSpeak:
      return RenderTemplate(
          TemplateText("speak"),
          {{"round", round}, {"turn", turn}, {"debate_turns", turns}});
    case PromptPurpose::kVote:
      return RenderTemplate(TemplateText("vote"),
                            {{"round", round},
                             {"options", JoinNames(obs, in.options)}});
    case PromptPurpose::kEstimate: {
      std::string known;
      for (const auto& [seat, role] : obs.known_roles) {
        if (seat == obs.seat || !obs.IsAlive(seat)) continue;
        known += (known.empty() ? "Already certain: " : " ") + obs.NameOf(seat) +
                 " is a " + std::string(RoleDisplayName(role)) + ".";
      }
      std::string format = "{";
      for (std::size_t i = 0; i < in.estimate_targets.size(); ++i) {
        if (i > 0) format += ", ";
        format += "\"" + obs.NameOf(in.estimate_targets[i]) +
                  "\": {\"Werewolf\": 0, \"Villager\": 0, \"Seer\": 0, "
                  "\"Doctor\": 0, \"reasoning\": \"...\"}";
      }
      format += "}";
      const RoleCounts& c = obs.role_counts;
      return RenderTemplate(
          TemplateText("estimation"),
          {{"name", obs.name},
           {"num_werewolves", std::to_string(c[Role::kWerewolf])},
           {"num_seers", std::to_string(c[Role::kSeer])},
           {"num_doctors", std::to_string(c[Role::kDoctor])},
           {"num_villagers", std::to_string(c[Role::kVillager])},
           {"targets", JoinNames(obs, in.estimate_targets)},
           {"known_rows", known},
           {"json_format", format}});
    }
    case PromptPurpose::kAdapt:
      return std::string(AdaptationCriteriaText(SideOf(obs.role))) + "\n\n" +
             std::string(TemplateText("adaptation_answer"));
  }
  return "";
}

bool IsActionPurpose(PromptPurpose p) {
  return p == PromptPurpose::kNight || p == PromptPurpose::kBid ||
         p == PromptPurpose::kSpeak || p == PromptPurpose::kVote;
}

}  // namespace

std::string_view PromptPurposeName(PromptPurpose purpose) {
  switch (purpose) {
    case PromptPurpose::kNight:
      return "night";
    case PromptPurpose::kBid:
      return "bid";
    case PromptPurpose::kSpeak:
      return "speak";
    case PromptPurpose::kVote:
      return "vote";
    case PromptPurpose::kEstimate:
      return "estimate";
    case PromptPurpose::kAdapt:
      return "adapt";
  }
  return "unknown";
}

std::string_view TemplateText(std::string_view stem) {
  const auto& all = prompt_data::Templates();
  auto it = all.find(stem);
  if (it == all.end()) {
    throw std::out_of_range("no prompt template named " + std::string(stem));
  }
  std::string_view text = it->second;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  return text;
}

std::string RenderTemplate(std::string_view text,
                           const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  for (;;) {
    const std::size_t open = text.find("{{", pos);
    if (open == std::string_view::npos) break;
    const std::size_t close = text.find("}}", open + 2);
    if (close == std::string_view::npos) break;
    out.append(text.substr(pos, open - pos));
    const std::string key(text.substr(open + 2, close - open - 2));
    auto it = values.find(key);
    if (it == values.end()) {
      throw std::invalid_argument("unbound template placeholder: " + key);
    }
    out += it->second;
    pos = close + 2;
  }
  out.append(text.substr(pos));
  return out;
}

std::string_view StrategyText(Side side, Strategy strategy) {
  const bool wolf = side == Side::kWerewolves;
  const bool support = strategy == Strategy::kSupport;
  if (wolf) {
    return TemplateText(support ? "strategy_werewolf_support"
                                : "strategy_werewolf_attack");
  }
  return TemplateText(support ? "strategy_villager_support"
                              : "strategy_villager_attack");
}

std::string_view AdaptationCriteriaText(Side side) {
  return TemplateText(side == Side::kWerewolves ? "adaptation_werewolf"
                                                : "adaptation_villager");
}

std::string PromptBundle::UserText() const {
  std::string out = role_rules_text;
  out += "\n\nDIALOGUE HISTORY\n";
  out += history_text.empty() ? "(nothing has happened yet)" : history_text;
  if (strategy_text) out += "\n\nSTRATEGY\n" + *strategy_text;
  if (estimation_injection) out += "\n\n" + *estimation_injection;
  out += "\n\n" + task_text;
  return out;
}

ChatRequest PromptBundle::ToRequest(std::string request_tag) const {
  ChatRequest request;
  request.messages = {{ChatRole::kSystem, system_text},
                      {ChatRole::kUser, UserText()}};
  request.model_name = decoding.model_name;
  request.temperature = decoding.temperature;
  request.max_output_tokens = decoding.max_output_tokens;
  request.request_tag = std::move(request_tag);
  return request;
}

std::string RenderEstimates(const Observation& obs,
                            const EstimateMatrix& estimates) {
  // ordered_json keeps seat order so the injection is byte-stable.
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [seat, row] : estimates.scores) {
    nlohmann::ordered_json r;
    for (Role role : {Role::kWerewolf, Role::kVillager, Role::kSeer,
                      Role::kDoctor}) {
      r[std::string(RoleDisplayName(role))] = row[role];
    }
    j[obs.NameOf(seat)] = r;
  }
  return j.dump();
}

std::string RenderHistory(const Observation& obs) {
  std::string out;
  for (const Event& e : obs.events) {
    std::string line = Line(obs, e);
    if (line.empty()) continue;
    if (!out.empty()) out += "\n";
    out += line;
  }
  return out;
}

PromptBundle BuildPrompt(const Observation& obs, const PromptInputs& in) {
  PromptBundle bundle;
  bundle.decoding = in.decoding;
  bundle.system_text = RenderTemplate(TemplateText("system"), {{"name", obs.name}});

  std::vector<int> everyone;
  for (const auto& entry : obs.roster) everyone.push_back(entry.seat);
  bundle.role_rules_text = RenderTemplate(
      TemplateText("rules"),
      {{"num_players", std::to_string(obs.roster.size())},
       {"player_list", JoinNames(obs, everyone)},
       {"role_census", RoleCensus(obs.role_counts)},
       {"debate_turns", std::to_string(obs.debate_turns)},
       {"name", obs.name},
       {"role", std::string(RoleDisplayName(obs.role))},
       {"side", obs.role == Role::kWerewolf ? "Werewolf" : "Villager"},
       {"round", std::to_string(obs.round)},
       {"alive_players", JoinNames(obs, obs.AliveSeats())},
       {"private_facts", PrivateFacts(obs)}});
  bundle.history_text = RenderHistory(obs);

  const bool strategy_kind = FixedStrategyOf(in.kind).has_value() ||
                             AdaptsStrategy(in.kind);
  if (strategy_kind && IsActionPurpose(in.purpose) && in.strategy) {
    bundle.strategy_text =
        std::string(StrategyText(SideOf(obs.role), *in.strategy));
  }
  if (UsesEstimation(in.kind) && in.purpose != PromptPurpose::kEstimate) {
    bundle.estimation_injection =
        "Latest role estimation (0-4): " +
        (in.estimates ? RenderEstimates(obs, *in.estimates)
                      : std::string("none yet"));
  }
  bundle.task_text = TaskText(obs, in);
  return bundle;
}

}  // namespace werewolf
