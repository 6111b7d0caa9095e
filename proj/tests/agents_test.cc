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

#include <algorithm>
#include <deque>
#include <set>

#include "doctest.h"
#include "werewolf/agents/human_policy.h"
#include "werewolf/agents/llm_policy.h"
#include "werewolf/agents/parsing.h"
#include "werewolf/agents/policy_factory.h"
#include "werewolf/agents/prompts.h"
#include "werewolf/agents/scripted_policy.h"
#include "werewolf/agents/synthetic_backend.h"
#include "werewolf/game/engine.h"

namespace werewolf {
namespace {

using Json = nlohmann::json;

// Seats 0-3 villager, 4 seer, 5 doctor, 6-7 werewolf.
// Will, Jacob, Dan, David, Mason, Hayley, Ginger, Paul.
GameConfig FixedConfig() {
  GameConfig config;
  config.seed = 1;
  config.fixed_role_assignment =
      std::vector<Role>{Role::kVillager, Role::kVillager, Role::kVillager,
                        Role::kVillager, Role::kSeer,     Role::kDoctor,
                        Role::kWerewolf, Role::kWerewolf};
  return config;
}

// Replies from a queue and keeps every request it saw.
struct QueueBackend {
  std::deque<ChatResponse> replies;
  std::vector<ChatRequest> seen;
  std::shared_ptr<CannedBackend> backend;

  explicit QueueBackend(std::vector<std::string> texts) {
    for (auto& t : texts) {
      ChatResponse r;
      r.text = std::move(t);
      replies.push_back(std::move(r));
    }
    backend = std::make_shared<CannedBackend>([this](const ChatRequest& req) {
      seen.push_back(req);
      if (replies.empty()) return ChatResponse::Failure("queue", "exhausted");
      ChatResponse r = replies.front();
      replies.pop_front();
      return r;
    });
  }
};

LlmPolicy MakeLlm(PolicyKind kind, int seat, QueueBackend& q) {
  return LlmPolicy(kind, seat, q.backend, DecodingParams{}, 99, "g1");
}

std::vector<std::string> Kinds(const std::vector<PolicyNoticeRecord>& notices) {
  std::vector<std::string> out;
  for (const auto& n : notices) out.push_back(n.kind);
  return out;
}

bool Has(const std::string& hay, std::string_view needle) {
  return hay.find(needle) != std::string::npos;
}

// Verbatim instruction texts the prompts must carry.
constexpr std::string_view kVillagerSupport =
    "- Refer to the latest Observation's role estimation(0-4) and follow the "
    "strategies below.\nYour goal is to act as a villager and persuade people "
    "to believe that.\nFor example, you can choose to make an appeal to other "
    "players, agree with their statements, or step in to defend a teammate "
    "when they are being criticized.";
constexpr std::string_view kVillagerAttack =
    "- Refer to the latest Observation's role estimation(0-4) and follow the "
    "strategies below.\nYour goal is to persuade others that someone else is "
    "Werewolf without making them suspect you and your teammate.\nFor example, "
    "you can pretend to be the Seer to lower the authenticity of the real "
    "Seer, accuse players on the Villager's side of being Werewolves, counter "
    "statements that attack you and your teammate, etc.";
constexpr std::string_view kWerewolfSupport =
    "- Refer to the latest Observation's role estimation(0-4) and follow the "
    "strategies below.\nYour goal is to persuade people to believe that you "
    "and your possible teammates are on the Villager’s side.\nYou can "
    "make appeal to the possible teammates, agree with their statements, step "
    "in to defend them when a possible teammate is being criticized, etc.";
constexpr std::string_view kWerewolfAttack =
    "- Refer to the latest Observation's role estimation(0-4) and follow the "
    "strategies below.\nYour goal is to express doubts about possible "
    "werewolves and persuade people to guide the vote.\nFor example, you can "
    "point out suspicious actions or statements from the possible werewolf or "
    "guide the vote.\nHowever, pointing out others' actions can easily provoke "
    "suspicion. Be mindful of the timing and the way you speak, and approach "
    "it gently.";
constexpr std::string_view kEstimationHead =
    "Estimate other player's role based on the information available to "
    "Ginger (You).\nScoring Guidelines:\nAssign a score from 0 to 4 for each "
    "role:\n0: Absolutely not that role.\n1: Unlikely to be that role.\n2: "
    "50/50 chance of being that role.\n3: Likely to be that role.\n4: "
    "Definitely that role.\nIf you are certain of other player's role, assign "
    "4 to that role and 0 to all others.\nAlso, at the beginning of the game, "
    "there are 2 Werewolves, 1 Seer, 1 Doctor, and 4 Villagers.";
constexpr std::string_view kEstimationOutput =
    "OUTPUT: Follow the JSON format below without adding extra characters. "
    "Each score should be an integer between 0 and 4.";
constexpr std::string_view kVillagerCriteria =
    "If potential Werewolves are not yet the focus of the discussion and have "
    "not been noticed: Acting inconspicuously is appropriate.";
constexpr std::string_view kWerewolfCriteria =
    "If your teammate is being suspected: Choose the Support strategy and "
    "support your teammate's statements.";
constexpr std::string_view kCriteriaTail =
    "- Based on the observations (conversation and latest possibility "
    "estimation), determine whether a Support or Attack strategy would be more "
    "effective.";

TEST_CASE("strategy texts are reproduced verbatim") {
  CHECK(StrategyText(Side::kVillagers, Strategy::kSupport) == kVillagerSupport);
  CHECK(StrategyText(Side::kVillagers, Strategy::kAttack) == kVillagerAttack);
  CHECK(StrategyText(Side::kWerewolves, Strategy::kSupport) == kWerewolfSupport);
  CHECK(StrategyText(Side::kWerewolves, Strategy::kAttack) == kWerewolfAttack);
  CHECK(Has(std::string(AdaptationCriteriaText(Side::kVillagers)),
            kVillagerCriteria));
  CHECK(Has(std::string(AdaptationCriteriaText(Side::kWerewolves)),
            kWerewolfCriteria));
  CHECK(Has(std::string(AdaptationCriteriaText(Side::kVillagers)), kCriteriaTail));
  CHECK(Has(std::string(AdaptationCriteriaText(Side::kWerewolves)),
            kCriteriaTail));
}

TEST_CASE("estimation prompt carries the scoring guidelines and census") {
  GameState state = NewGame(FixedConfig());
  const Observation obs = Observe(state, 6);
  PromptInputs in;
  in.kind = PolicyKind::kAdaptive;
  in.purpose = PromptPurpose::kEstimate;
  in.estimate_targets = {0, 1, 2, 3, 4, 5};
  const std::string text = BuildPrompt(obs, in).UserText();
  CHECK(Has(text, kEstimationHead));
  CHECK(Has(text, kEstimationOutput));
  CHECK(Has(text, "there are 2 Werewolves, 1 Seer, 1 Doctor"));
  CHECK(Has(text, "0: Absolutely not that role"));
  CHECK(Has(text, "Players to estimate: Will, Jacob, Dan, David, Mason, Hayley"));
  CHECK(Has(text, "Already certain: Paul is a Werewolf."));
  CHECK_FALSE(Has(text, "Ginger\": {"));
}

TEST_CASE("strategy section follows the policy kind") {
  GameState state = NewGame(FixedConfig());
  const Observation seer = Observe(state, 4);
  const Observation wolf = Observe(state, 7);

  PromptInputs in;
  in.purpose = PromptPurpose::kSpeak;
  in.kind = PolicyKind::kAdaptive;
  in.strategy = Strategy::kSupport;
  CHECK(Has(BuildPrompt(seer, in).UserText(),
            "act as a villager and persuade"));
  CHECK(Has(BuildPrompt(wolf, in).UserText(),
            "persuade people to believe that you and your possible teammates "
            "are on the Villager"));

  in.kind = PolicyKind::kFixedAttack;
  in.strategy = Strategy::kAttack;
  CHECK(Has(BuildPrompt(wolf, in).UserText(),
            "point out suspicious actions or statements"));

  in.kind = PolicyKind::kImplicit;
  in.strategy.reset();
  for (const Observation* obs : {&seer, &wolf}) {
    const PromptBundle b = BuildPrompt(*obs, in);
    CHECK_FALSE(b.strategy_text.has_value());
    CHECK_FALSE(b.estimation_injection.has_value());
    const std::string text = b.UserText();
    for (Side side : {Side::kVillagers, Side::kWerewolves}) {
      for (Strategy s : {Strategy::kSupport, Strategy::kAttack}) {
        CHECK_FALSE(Has(text, StrategyText(side, s)));
      }
    }
    CHECK(Has(text, "GAME RULES"));
    CHECK(Has(text, "DIALOGUE HISTORY"));
  }
}

TEST_CASE("a bundle never carries both strategy texts") {
  GameState state = NewGame(FixedConfig());
  for (int seat = 0; seat < 8; ++seat) {
    const Observation obs = Observe(state, seat);
    const Side side = SideOf(obs.role);
    for (PolicyKind kind : {PolicyKind::kFixedSupport, PolicyKind::kFixedAttack,
                            PolicyKind::kAdaptive}) {
      for (Strategy s : {Strategy::kSupport, Strategy::kAttack}) {
        PromptInputs in;
        in.kind = kind;
        in.purpose = PromptPurpose::kVote;
        in.strategy = s;
        in.options = obs.AliveOthers();
        const std::string text = BuildPrompt(obs, in).UserText();
        const bool support = Has(text, StrategyText(side, Strategy::kSupport));
        const bool attack = Has(text, StrategyText(side, Strategy::kAttack));
        CHECK(support != attack);
      }
    }
  }
}

TEST_CASE("estimation injection only for estimating kinds") {
  GameState state = NewGame(FixedConfig());
  const Observation obs = Observe(state, 6);
  EstimateMatrix m;
  m.observer = 6;
  m.scores[0] = RoleScores{{3, 1, 0, 4}};
  m.scores[7] = RoleScores::Certain(Role::kWerewolf);
  const std::string rendered = RenderEstimates(obs, m);
  CHECK(rendered ==
        "{\"Will\":{\"Werewolf\":4,\"Villager\":3,\"Seer\":1,\"Doctor\":0},"
        "\"Paul\":{\"Werewolf\":4,\"Villager\":0,\"Seer\":0,\"Doctor\":0}}");

  PromptInputs in;
  in.purpose = PromptPurpose::kAdapt;
  in.estimates = &m;
  in.kind = PolicyKind::kAdaptive;
  CHECK(Has(BuildPrompt(obs, in).UserText(), rendered));
  CHECK(Has(BuildPrompt(obs, in).UserText(), kWerewolfCriteria));
  in.kind = PolicyKind::kAdaptiveWithoutEstimation;
  const PromptBundle without = BuildPrompt(obs, in);
  CHECK_FALSE(without.estimation_injection.has_value());
  CHECK_FALSE(Has(without.UserText(), rendered));
  CHECK_FALSE(Has(without.UserText(), "Latest role estimation"));
  in.kind = PolicyKind::kEstimationOnly;
  in.purpose = PromptPurpose::kSpeak;
  CHECK(Has(BuildPrompt(obs, in).UserText(), rendered));

  // Villager-side criteria for every non-werewolf role.
  in.kind = PolicyKind::kAdaptive;
  in.purpose = PromptPurpose::kAdapt;
  for (int seat : {0, 4, 5}) {
    CHECK(Has(BuildPrompt(Observe(state, seat), in).UserText(),
              kVillagerCriteria));
  }
}

TEST_CASE("prompts are byte-stable and hide other roles") {
  GameState state = NewGame(FixedConfig());
  ResolveNight(state, NightActions{0, 0, SeerInvestigation{4, 6}});
  PromptInputs in;
  in.kind = PolicyKind::kImplicit;
  in.purpose = PromptPurpose::kSpeak;
  const Observation villager = Observe(state, 1);
  CHECK(BuildPrompt(villager, in).UserText() ==
        BuildPrompt(Observe(state, 1), in).UserText());
  const std::string text = BuildPrompt(villager, in).UserText();
  CHECK_FALSE(Has(text, "Ginger is a Werewolf"));
  CHECK_FALSE(Has(text, "protected"));
  CHECK(Has(text, "Night 1: nobody died."));

  const std::string seer_text = BuildPrompt(Observe(state, 4), in).UserText();
  CHECK(Has(seer_text, "Your investigations: Ginger is a Werewolf."));
  CHECK(Has(seer_text, "you learned that Ginger is a Werewolf"));
}

TEST_CASE("template rendering rejects unbound placeholders") {
  CHECK(RenderTemplate("a {{x}} b {{x}}", {{"x", "1"}}) == "a 1 b 1");
  CHECK_THROWS_AS(RenderTemplate("{{missing}}", {}), std::invalid_argument);
  CHECK_THROWS_AS(TemplateText("no_such_template"), std::out_of_range);
}

TEST_CASE("target parsing") {
  GameState state = NewGame(FixedConfig());
  const Observation obs = Observe(state, 6);
  const std::vector<int> options = {0, 1, 2};
  CHECK(ParseTargetAnswer(obs, "Jacob", options) == 1);
  CHECK(ParseTargetAnswer(obs, "  I choose jacob.", options) == 1);
  CHECK_FALSE(ParseTargetAnswer(obs, "Will and Jacob", options).has_value());
  CHECK_FALSE(ParseTargetAnswer(obs, "Paul", options).has_value());
  CHECK_FALSE(ParseTargetAnswer(obs, "Danny", options).has_value());
  CHECK(ParseTargetAnswer(obs, "Will Will", options) == 0);
}

TEST_CASE("bid parsing") {
  CHECK(ParseBidAnswer("4").value == 4);
  CHECK(ParseBidAnswer("My bid: 3").value == 3);
  const BidParse seven = ParseBidAnswer("I bid seven");
  CHECK_FALSE(seven.parsed);
  CHECK(seven.value == 0);
  const BidParse big = ParseBidAnswer("99");
  CHECK(big.clamped);
  CHECK(big.value == 4);
  CHECK(ParseBidAnswer("-3").value == 0);
  CHECK(ParseBidAnswer("99999999999999999999999").value == 4);
}

TEST_CASE("strategy label extraction is lenient but unambiguous") {
  CHECK(ParseStrategyAnswer("Attack") == Strategy::kAttack);
  CHECK(ParseStrategyAnswer("support the seer") == Strategy::kSupport);
  CHECK(ParseStrategyAnswer("Strategy: SUPPORT\nReason: avoid attack") ==
        Strategy::kSupport);
  CHECK_FALSE(ParseStrategyAnswer("support and attack").has_value());
  CHECK_FALSE(ParseStrategyAnswer("Strategy: Defend").has_value());
  CHECK_FALSE(ParseStrategyAnswer("").has_value());
  CHECK(ParseRationale("Strategy: Attack\nReason: Dan is cornered.") ==
        "Dan is cornered.");
}

TEST_CASE("estimate parsing validates every row") {
  GameState state = NewGame(FixedConfig());
  const Observation obs = Observe(state, 0);
  const std::vector<int> targets = {1, 7};
  const std::string good =
      "```json\n{\"Jacob\": {\"Werewolf\": 1, \"Villager\": 3, \"Seer\": 0, "
      "\"Doctor\": 1, \"reasoning\": \"calm\"}, \"paul\": {\"werewolf\": 4, "
      "\"villager\": 0, \"seer\": 0, \"doctor\": 0}}\n```";
  auto parsed = ParseEstimateAnswer(obs, good, targets);
  REQUIRE(std::holds_alternative<ParsedEstimates>(parsed));
  const auto& rows = std::get<ParsedEstimates>(parsed);
  CHECK(rows.rows.at(7) == RoleScores::Certain(Role::kWerewolf));
  CHECK(rows.rows.at(1)[Role::kVillager] == 3);
  CHECK(rows.reasoning.at(1) == "calm");

  auto bad = [&](const std::string& text) {
    return std::holds_alternative<std::string>(
        ParseEstimateAnswer(obs, text, targets));
  };
  CHECK(bad("{not json"));
  CHECK(bad("{\"Jacob\": {\"Werewolf\": 5, \"Villager\": 0, \"Seer\": 0, "
            "\"Doctor\": 0}, \"Paul\": {\"Werewolf\": 4, \"Villager\": 0, "
            "\"Seer\": 0, \"Doctor\": 0}}"));
  CHECK(bad("{\"Jacob\": {\"Werewolf\": 0, \"Villager\": 0, \"Seer\": 0, "
            "\"Doctor\": 0}, \"Paul\": {\"Werewolf\": 4, \"Villager\": 0, "
            "\"Seer\": 0, \"Doctor\": 0}}"));
  CHECK(bad("{\"Jacob\": {\"Werewolf\": 2.5, \"Villager\": 0, \"Seer\": 0, "
            "\"Doctor\": 0}, \"Paul\": {\"Werewolf\": 4, \"Villager\": 0, "
            "\"Seer\": 0, \"Doctor\": 0}}"));
  CHECK(bad("{\"Jacob\": {\"Werewolf\": 1, \"Villager\": 0, \"Seer\": 0, "
            "\"Doctor\": 0}}"));
}

TEST_CASE("scripted policy follows its fixed rules") {
  GameState state = NewGame(FixedConfig());
  ScriptedPolicy lead(6), seer(4), doctor(5), villager(0);
  const Observation lead_obs = Observe(state, 6);
  CHECK(lead.DecideNightAction(lead_obs, LegalNightTargets(state, 6)) == 0);
  CHECK(doctor.DecideNightAction(Observe(state, 5),
                                 LegalNightTargets(state, 5)) == 5);
  CHECK(seer.DecideNightAction(Observe(state, 4), LegalNightTargets(state, 4)) ==
        0);
  CHECK(villager.Bid(Observe(state, 0)) == 0);
  CHECK(lead.Bid(lead_obs) == 1);
  CHECK(seer.Bid(Observe(state, 4)) == 2);
  CHECK(lead.Speak(lead_obs) == "I think Will is suspicious.");

  // Seer learns seat 6 overnight; seat 0 is killed.
  GameState night2 = NewGame(FixedConfig());
  ResolveNight(night2, NightActions{0, 5, SeerInvestigation{4, 6}});
  CHECK_FALSE(night2.IsAlive(0));
  CHECK(seer.Vote(Observe(night2, 4)) == 6);
  CHECK(seer.Speak(Observe(night2, 4)) ==
        "I am the Seer and Ginger is a Werewolf.");
  CHECK(villager.Vote(Observe(night2, 1)) == 2);  // lowest alive other
  CHECK(ScriptedVote(Observe(night2, 7)) == 1);
  CHECK(ScriptedVote(Observe(night2, 6)) == 1);
  // Next night the seer picks someone not yet investigated.
  const std::vector<int> legal = {1, 2, 6};
  CHECK(ScriptedNightTarget(Observe(night2, 4), legal) == 1);
}

TEST_CASE("doctor without self-save protects the lowest legal target") {
  GameConfig config = FixedConfig();
  config.doctor_may_self_save = false;
  GameState state = NewGame(config);
  CHECK(ScriptedNightTarget(Observe(state, 5), LegalNightTargets(state, 5)) == 0);
}

TEST_CASE("llm werewolf naming Jacob targets Jacob") {
  GameState state = NewGame(FixedConfig());
  QueueBackend q({"Jacob"});
  LlmPolicy wolf = MakeLlm(PolicyKind::kImplicit, 6, q);
  CHECK(wolf.DecideNightAction(Observe(state, 6), LegalNightTargets(state, 6)) ==
        1);
  REQUIRE(q.seen.size() == 1);
  CHECK(q.seen[0].request_tag == "g1/6/night/r1");
  CHECK(Has(q.seen[0].messages[1].text,
            "Options: Will, Jacob, Dan, David, Mason, Hayley"));
  CHECK(wolf.TakeNotices().empty());
}

TEST_CASE("illegal vote is re-prompted once then replaced") {
  GameState state = NewGame(FixedConfig());
  ResolveNight(state, NightActions{0, 5, SeerInvestigation{4, 6}});
  SUBCASE("second answer accepted") {
    QueueBackend q({"Will", "Dan"});
    LlmPolicy p = MakeLlm(PolicyKind::kImplicit, 1, q);
    CHECK(p.Vote(Observe(state, 1)) == 2);
    REQUIRE(q.seen.size() == 2);
    CHECK(q.seen[1].messages.size() == 4);
    CHECK(q.seen[1].messages[2].text == "Will");
    CHECK(Has(q.seen[1].messages[3].text, "could not be used"));
    CHECK(p.TakeNotices().empty());
  }
  SUBCASE("second failure falls back to a random legal target") {
    QueueBackend q({"Will", "Jacob"});
    LlmPolicy p = MakeLlm(PolicyKind::kImplicit, 1, q);
    const Observation obs = Observe(state, 1);
    const int vote = p.Vote(obs);
    const auto legal = obs.AliveOthers();
    CHECK(std::find(legal.begin(), legal.end(), vote) != legal.end());
    CHECK(Kinds(p.TakeNotices()) == std::vector<std::string>{"vote_fallback"});
  }
}

TEST_CASE("bids are parsed and clamped with warnings") {
  GameState state = NewGame(FixedConfig());
  ResolveNight(state, NightActions{});
  const Observation obs = Observe(state, 2);
  QueueBackend q({"4", "I bid seven", "99"});
  LlmPolicy p = MakeLlm(PolicyKind::kImplicit, 2, q);
  CHECK(p.Bid(obs) == 4);
  CHECK(p.TakeNotices().empty());
  CHECK(p.Bid(obs) == 0);
  CHECK(Kinds(p.TakeNotices()) == std::vector<std::string>{"bid_unparseable"});
  CHECK(p.Bid(obs) == 4);
  CHECK(Kinds(p.TakeNotices()) == std::vector<std::string>{"bid_clamped"});
  CHECK(p.Bid(obs) == 0);  // backend exhausted: declared failure
  CHECK(Kinds(p.TakeNotices()) ==
        std::vector<std::string>{"backend_failure", "bid_fallback"});
  CHECK(q.seen[0].request_tag == "g1/2/bid/r1/t1");
}

TEST_CASE("failed speech becomes a templated pass") {
  GameState state = NewGame(FixedConfig());
  ResolveNight(state, NightActions{});
  QueueBackend q({"   "});
  LlmPolicy p = MakeLlm(PolicyKind::kFixedSupport, 3, q);
  CHECK(p.Speak(Observe(state, 3)) == "David passes.");
  CHECK(Has(q.seen[0].messages[1].text, kVillagerSupport));
}

TEST_CASE("estimation forces known rows and falls back to uniform") {
  GameState state = NewGame(FixedConfig());
  ResolveNight(state, NightActions{});
  const Observation obs = Observe(state, 6);
  const AdaptationMoment moment{MomentKind::kAfterNightAbilities, 1};
  std::string reply = "{";
  for (const char* name : {"Will", "Jacob", "Dan", "David", "Mason", "Hayley"}) {
    if (reply.size() > 1) reply += ",";
    reply += std::string("\"") + name +
             "\":{\"Werewolf\":1,\"Villager\":3,\"Seer\":1,\"Doctor\":1}";
  }
  reply += "}";

  SUBCASE("out-of-range score triggers a re-prompt") {
    QueueBackend q({"{\"Will\":{\"Werewolf\":5,\"Villager\":0,\"Seer\":0,"
                    "\"Doctor\":0}}",
                    reply});
    LlmPolicy p = MakeLlm(PolicyKind::kAdaptive, 6, q);
    const EstimateMatrix m = p.EstimateRoles(obs, moment, false);
    CHECK(q.seen.size() == 2);
    CHECK_FALSE(m.fallback);
    CHECK(m.scores.size() == 7);
    CHECK(m.scores.at(7) == RoleScores::Certain(Role::kWerewolf));
    CHECK(m.known_targets == std::set<int>{7});
    CHECK(m.scores.at(0) == RoleScores{{3, 1, 1, 1}});
    CHECK_FALSE(Has(q.seen[0].messages[1].text, "\"Paul\": {"));
    REQUIRE(p.latest_estimates().has_value());
  }
  SUBCASE("two failures give uniform rows") {
    QueueBackend q({"garbage", "still garbage"});
    LlmPolicy p = MakeLlm(PolicyKind::kImplicit, 6, q);
    const EstimateMatrix m = p.EstimateRoles(obs, moment, true);
    CHECK(m.fallback);
    CHECK(m.measurement_only);
    CHECK(m.scores.at(0) == RoleScores::Uniform());
    CHECK(m.scores.at(7) == RoleScores::Certain(Role::kWerewolf));
    CHECK(Kinds(p.TakeNotices()) ==
          std::vector<std::string>{"estimate_fallback"});
    // Measurement never becomes prompt input.
    CHECK_FALSE(p.latest_estimates().has_value());
  }
  SUBCASE("nothing to ask when every role is known") {
    GameState two = NewGame(FixedConfig());
    QueueBackend q({});
    LlmPolicy p = MakeLlm(PolicyKind::kAdaptive, 6, q);
    Observation tiny = Observe(two, 6);
    for (auto& entry : tiny.roster) entry.alive = entry.seat >= 6;
    const EstimateMatrix m = p.EstimateRoles(tiny, moment, false);
    CHECK(q.seen.empty());
    CHECK(m.scores.size() == 1);
  }
}

TEST_CASE("strategy decisions") {
  GameState state = NewGame(FixedConfig());
  ResolveNight(state, NightActions{});
  const Observation obs = Observe(state, 7);
  const AdaptationMoment moment{MomentKind::kAfterDebate, 1};
  {
    QueueBackend q({"Attack"});
    LlmPolicy p = MakeLlm(PolicyKind::kAdaptive, 7, q);
    CHECK(p.ActiveStrategy() == Strategy::kSupport);
    const StrategyChoice c = p.DecideStrategy(obs, moment);
    CHECK(c.strategy == Strategy::kAttack);
    CHECK(c.player == 7);
    CHECK(c.moment == moment);
    CHECK(p.ActiveStrategy() == Strategy::kAttack);
    CHECK(Has(q.seen[0].messages[1].text, kWerewolfCriteria));
    CHECK(Has(q.seen[0].messages[1].text, "Latest role estimation (0-4):"));
  }
  {
    QueueBackend q({"support the seer"});
    LlmPolicy p = MakeLlm(PolicyKind::kAdaptiveWithoutEstimation, 7, q);
    CHECK(p.DecideStrategy(obs, moment).strategy == Strategy::kSupport);
    CHECK_FALSE(Has(q.seen[0].messages[1].text, "Latest role estimation"));
  }
  {
    QueueBackend q({"support or attack?", "no idea"});
    LlmPolicy p = MakeLlm(PolicyKind::kAdaptive, 7, q);
    const StrategyChoice c = p.DecideStrategy(obs, moment);
    CHECK(q.seen.size() == 2);
    CHECK(c.strategy == Strategy::kSupport);
    CHECK(c.rationale == "fallback");
    CHECK(c.fallback);
  }
  {
    QueueBackend q({});  // outage
    LlmPolicy p = MakeLlm(PolicyKind::kAdaptive, 7, q);
    const StrategyChoice c = p.DecideStrategy(obs, moment);
    CHECK(c.strategy == Strategy::kSupport);
    CHECK(Kinds(p.TakeNotices()) ==
          std::vector<std::string>{"backend_failure", "strategy_fallback"});
  }
  {
    QueueBackend q({});
    LlmPolicy implicit = MakeLlm(PolicyKind::kImplicit, 7, q);
    CHECK_FALSE(implicit.SelectsStrategy());
    CHECK_THROWS_AS(implicit.DecideStrategy(obs, moment), std::logic_error);
    CHECK_FALSE(implicit.ActiveStrategy().has_value());
  }
}

TEST_CASE("garbage output never yields an illegal decision") {
  auto garbage = std::make_shared<GarbageBackend>(11);
  GameState state = NewGame(FixedConfig());
  ResolveNight(state, NightActions{0, 5, SeerInvestigation{4, 6}});
  int fallbacks = 0;
  for (int seat = 1; seat < 8; ++seat) {
    LlmPolicy p(PolicyKind::kAdaptive, seat, garbage, {}, 3, "fuzz");
    const Observation obs = Observe(state, seat);
    const auto others = obs.AliveOthers();
    for (int i = 0; i < 40; ++i) {
      const int vote = p.Vote(obs);
      CHECK(std::find(others.begin(), others.end(), vote) != others.end());
      const int bid = p.Bid(obs);
      CHECK(bid >= 0);
      CHECK(bid <= 4);
      CHECK_FALSE(p.Speak(obs).empty());
      const EstimateMatrix m = p.EstimateRoles(
          obs, {MomentKind::kAfterNightAbilities, 1}, false);
      CHECK(m.scores.size() == others.size());
      for (const auto& [target, row] : m.scores) CHECK_NOTHROW(ValidateRow(row));
      p.DecideStrategy(obs, {MomentKind::kAfterDebate, 1});
    }
    fallbacks += static_cast<int>(p.TakeNotices().size());
  }
  CHECK(fallbacks > 0);
}

TEST_CASE("synthetic backend answers every purpose in format") {
  auto backend = std::make_shared<SyntheticBackend>(5);
  GameState state = NewGame(FixedConfig());
  const Observation obs = Observe(state, 6);
  LlmPolicy p(PolicyKind::kAdaptive, 6, backend, {}, 1, "syn");
  const auto legal = LegalNightTargets(state, 6);
  const int target = p.DecideNightAction(obs, legal);
  CHECK(std::find(legal.begin(), legal.end(), target) != legal.end());
  const EstimateMatrix m =
      p.EstimateRoles(obs, {MomentKind::kAfterNightAbilities, 1}, false);
  CHECK_FALSE(m.fallback);
  p.DecideStrategy(obs, {MomentKind::kAfterNightAbilities, 1});
  CHECK(p.TakeNotices().empty());

  // Same request, same answer.
  LlmPolicy q(PolicyKind::kAdaptive, 6, backend, {}, 1, "syn");
  CHECK(q.DecideNightAction(obs, legal) == target);
}

// Replays a fixed list of payloads, ignoring deadlines.
class FakeHuman : public HumanDecisionSource {
 public:
  std::deque<std::optional<Json>> payloads;
  std::vector<std::string> rejections;
  std::vector<DecisionKind> kinds;

  std::optional<Json> Await(const DecisionRequest& request,
                            const DecisionValidator& validate) override {
    kinds.push_back(request.kind);
    while (!payloads.empty()) {
      std::optional<Json> p = payloads.front();
      payloads.pop_front();
      if (!p) return std::nullopt;  // timeout
      if (auto error = validate(*p)) {
        rejections.push_back(*error);
        continue;
      }
      return p;
    }
    return std::nullopt;
  }
};

TEST_CASE("human decisions are validated and time out to scripted rules") {
  GameState state = NewGame(FixedConfig());
  ResolveNight(state, NightActions{0, 5, SeerInvestigation{4, 6}});
  FakeHuman human;
  PolicyDeps deps;
  deps.human = &human;
  auto policy = MakePolicy(PolicyKind::kHuman, 4, deps);
  const Observation obs = Observe(state, 4);

  human.payloads = {Json{{"target", 0}}, Json{{"target", "Paul"}}};
  CHECK(policy->Vote(obs) == 7);
  CHECK(human.rejections.size() == 1);
  human.payloads = {std::nullopt};
  CHECK(policy->Vote(obs) == 6);  // scripted seer: known werewolf
  CHECK(Kinds(policy->TakeNotices()) ==
        std::vector<std::string>{"human_timeout"});
  human.payloads = {Json{{"bid", 9}}, Json{{"bid", 3}}};
  CHECK(policy->Bid(obs) == 3);
  human.payloads = {Json{{"text", ""}}, Json{{"text", "Trust me."}}};
  CHECK(policy->Speak(obs) == "Trust me.");
  CHECK(human.kinds.back() == DecisionKind::kSpeak);
  CHECK_THROWS_AS(MakePolicy(PolicyKind::kHuman, 4, PolicyDeps{}),
                  std::invalid_argument);
}

TEST_CASE("policy kind names round-trip") {
  for (PolicyKind k :
       {PolicyKind::kImplicit, PolicyKind::kFixedSupport,
        PolicyKind::kFixedAttack, PolicyKind::kAdaptive,
        PolicyKind::kAdaptiveWithoutEstimation, PolicyKind::kEstimationOnly,
        PolicyKind::kScripted, PolicyKind::kHuman}) {
    CHECK(ParsePolicyKind(PolicyKindName(k)) == k);
  }
  CHECK_FALSE(ParsePolicyKind("proposal").has_value());
  CHECK(UsesEstimation(PolicyKind::kEstimationOnly));
  CHECK_FALSE(UsesEstimation(PolicyKind::kAdaptiveWithoutEstimation));
  CHECK(AdaptsStrategy(PolicyKind::kAdaptiveWithoutEstimation));
  CHECK_FALSE(AdaptsStrategy(PolicyKind::kEstimationOnly));
}

}  // namespace
}  // namespace werewolf
