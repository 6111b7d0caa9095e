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

#include "werewolf/tournament/match.h"

#include <algorithm>
#include <memory>
#include <vector>

#include "werewolf/game/engine.h"
#include "werewolf/game/observation.h"
#include "werewolf/game/rng.h"

namespace werewolf {

namespace {

class MatchRunner {
 public:
  explicit MatchRunner(const MatchSetup& setup)
      : setup_(setup),
        state_(NewGame(setup.config)),
        repair_rng_(MixSeed(setup.config.seed ^ 0x7265706169727300ULL)) {
    PolicyDeps deps = setup.deps;
    deps.seed = setup.config.seed;
    deps.game_id = setup.game_id;
    if (deps.backend) {
      meter_ = std::make_shared<UsageMeter>(deps.backend);
      deps.backend = meter_;
    }
    for (const PlayerRecord& p : state_.players) {
      PolicyKind kind = p.role == Role::kWerewolf ? setup.werewolf_policy
                                                  : setup.villager_policy;
      if (auto it = setup.seat_overrides.find(p.seat);
          it != setup.seat_overrides.end()) {
        kind = it->second;
      }
      policies_.push_back(MakePolicy(kind, p.seat, deps));
    }
  }

  Transcript Run() {
    while (!state_.Ended()) {
      Night();
      if (state_.Ended()) break;
      Moment(MomentKind::kAfterNightAbilities, state_.round);
      Debate();
      Moment(MomentKind::kAfterDebate, state_.round);
      const int round = state_.round;
      Vote();
      if (state_.Ended()) break;
      Moment(MomentKind::kAfterVote, round);
    }
    Flush();
    return Finish();
  }

 private:
  Policy& At(int seat) { return *policies_[seat]; }

  // Forwards new engine events to the hook.
  void Flush(const EstimateMatrix* snapshot = nullptr) {
    for (; flushed_ < state_.event_log.size(); ++flushed_) {
      if (!setup_.on_event) continue;
      const Event& e = state_.event_log[flushed_];
      const bool is_snapshot = EventAs<EstimationSnapshot>(e) != nullptr;
      setup_.on_event(e, state_, is_snapshot ? snapshot : nullptr);
    }
  }

  void Append(EventBody body, const EstimateMatrix* snapshot = nullptr) {
    AppendAgentEvent(state_, std::move(body));
    Flush(snapshot);
  }

  void DrainNotices(int seat) {
    for (auto& n : At(seat).TakeNotices()) {
      ++fallbacks_;
      Append(PolicyNotice{seat, std::move(n.kind), std::move(n.detail)});
    }
  }

  int Repair(int seat, const char* what, int chosen,
             const std::vector<int>& legal) {
    if (std::find(legal.begin(), legal.end(), chosen) != legal.end()) {
      return chosen;
    }
    ++illegal_;
    const int pick = repair_rng_.Pick(std::span<const int>(legal));
    Append(PolicyNotice{seat, "illegal_action_replaced",
                        std::string(what) + " target " +
                            std::to_string(chosen) + " replaced by " +
                            std::to_string(pick)});
    return pick;
  }

  void Night() {
    NightActions actions;
    auto decide = [&](int actor) {
      const std::vector<int> legal = LegalNightTargets(state_, actor);
      if (legal.empty()) return std::optional<int>();
      const int chosen =
          At(actor).DecideNightAction(Observe(state_, actor), legal);
      DrainNotices(actor);
      return std::optional<int>(Repair(actor, "night", chosen, legal));
    };
    if (auto lead = LeadWerewolf(state_)) actions.kill = decide(*lead);
    if (auto doctor = state_.SeatOfRole(Role::kDoctor);
        doctor && state_.IsAlive(*doctor)) {
      actions.save = decide(*doctor);
    }
    if (auto seer = state_.SeatOfRole(Role::kSeer);
        seer && state_.IsAlive(*seer)) {
      if (auto target = decide(*seer)) {
        actions.investigate = SeerInvestigation{*seer, *target};
      }
    }
    ResolveNight(state_, actions);
    Flush();
  }

  void Debate() {
    while (state_.phase == Phase::kDayDebate) {
      std::map<int, int> bids;
      for (int seat : state_.AliveSeats()) {
        int bid = At(seat).Bid(Observe(state_, seat));
        DrainNotices(seat);
        if (bid < kMinBid || bid > kMaxBid) {
          ++illegal_;
          Append(PolicyNotice{seat, "illegal_action_replaced",
                              "bid " + std::to_string(bid) + " replaced by 0"});
          bid = 0;
        }
        bids[seat] = bid;
      }
      const std::optional<int> speaker = RunDebateTurn(state_, bids);
      Flush();
      if (!speaker) continue;
      std::string text = At(*speaker).Speak(Observe(state_, *speaker));
      DrainNotices(*speaker);
      if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
        ++illegal_;
        Append(PolicyNotice{*speaker, "illegal_action_replaced",
                            "empty utterance replaced"});
        text = state_.players[*speaker].name + " passes.";
      }
      RecordUtterance(state_, std::move(text));
      Flush();
    }
  }

  void Vote() {
    std::map<int, int> votes;
    for (int seat : state_.AliveSeats()) {
      const int chosen = At(seat).Vote(Observe(state_, seat));
      DrainNotices(seat);
      votes[seat] = Repair(seat, "vote", chosen, LegalVoteTargets(state_, seat));
    }
    TallyVotes(state_, votes);
    Flush();
  }

  // Estimates first, then strategy selection, so a selection can use the
  // estimate taken at the same moment.
  void Moment(MomentKind kind, int round) {
    const AdaptationMoment moment{kind, round};
    const std::vector<int> alive = state_.AliveSeats();
    for (int seat : alive) {
      Policy& p = At(seat);
      if (!p.ProducesEstimates()) continue;
      const bool measurement_only = !UsesEstimation(p.kind());
      EstimateMatrix m = p.EstimateRoles(Observe(state_, seat), moment,
                                         measurement_only);
      DrainNotices(seat);
      const int id = static_cast<int>(estimations_.size());
      estimations_.push_back(std::move(m));
      const EstimateMatrix& stored = estimations_.back();
      Append(EstimationSnapshot{seat, id, moment, measurement_only,
                                stored.fallback},
             &stored);
    }
    for (int seat : alive) {
      Policy& p = At(seat);
      if (!p.SelectsStrategy()) continue;
      StrategyChoice c = p.DecideStrategy(Observe(state_, seat), moment);
      DrainNotices(seat);
      Append(StrategySelected{seat, moment, c.strategy, std::move(c.rationale)});
    }
  }

  Transcript Finish() {
    Transcript t;
    t.game_id = setup_.game_id;
    t.label = setup_.label;
    t.seed = setup_.config.seed;
    t.config = setup_.config;
    for (const PlayerRecord& p : state_.players) {
      t.players.push_back(
          SeatInfo{p.seat, p.name, p.role, policies_[p.seat]->kind()});
    }
    t.backend = setup_.deps.backend ? setup_.deps.backend->id() : "none";
    t.events = state_.event_log;
    t.estimations = std::move(estimations_);
    MatchSummary r;
    r.winner = state_.winner;
    r.truncated = state_.truncated;
    r.rounds_played = state_.round;
    if (meter_) {
      r.usage = meter_->total();
      r.requests = meter_->requests();
    }
    r.illegal_actions = illegal_;
    r.fallbacks = fallbacks_;
    t.result = r;
    return t;
  }

  const MatchSetup& setup_;
  GameState state_;
  MatchRng repair_rng_;
  std::shared_ptr<UsageMeter> meter_;
  std::vector<std::unique_ptr<Policy>> policies_;
  std::vector<EstimateMatrix> estimations_;
  std::size_t flushed_ = 0;
  int illegal_ = 0;
  int fallbacks_ = 0;
};

}  // namespace

Transcript RunMatch(const MatchSetup& setup) {
  return MatchRunner(setup).Run();
}

}  // namespace werewolf
