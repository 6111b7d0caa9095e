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

#include "werewolf/tournament/validate.h"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace werewolf {

namespace {

enum class Stage { kNight, kDebate, kVote, kOver };

class Validator {
 public:
  explicit Validator(const Transcript& t) : t_(t) {
    for (const char* name :
         {kCheckSequence, kCheckPhase, kCheckLiveness, kCheckConservation,
          kCheckSingleElimination, kCheckWin, kCheckTermination}) {
      report_.checks.push_back({name, true, ""});
    }
    for (const SeatInfo& p : t.players) roles_.push_back(p.role);
    alive_.assign(roles_.size(), true);
  }

  ValidationReport Run() {
    const int n = static_cast<int>(roles_.size());
    if (n == 0 || n != t_.config.num_players()) {
      Fail(kCheckConservation, "roster does not match the configuration");
      return report_;
    }
    for (std::size_t i = 0; i < t_.events.size(); ++i) {
      const Event& e = t_.events[i];
      if (e.seq != static_cast<int>(i)) {
        Fail(kCheckSequence, "event " + std::to_string(i) + " has seq " +
                                 std::to_string(e.seq));
      }
      if (stage_ == Stage::kOver) {
        Fail(kCheckTermination, "event after the game ended (seq " +
                                    std::to_string(e.seq) + ")");
        break;
      }
      if (e.visibility != Visibility::kPublic &&
          e.visibility != Visibility::kPrivate &&
          e.visibility != Visibility::kInternal) {
        Fail(kCheckSequence, "bad visibility");
      }
      if (e.round != round_) {
        Fail(kCheckPhase, At(e) + "round " + std::to_string(e.round) +
                              " during round " + std::to_string(round_));
      }
      std::visit([&](const auto& body) { On(e, body); }, e.body);
    }
    Finish();
    return report_;
  }

 private:
  std::string At(const Event& e) const {
    return "seq " + std::to_string(e.seq) + ": ";
  }

  void Fail(const char* check, const std::string& detail) {
    for (auto& c : report_.checks) {
      if (c.name == check && c.passed) {
        c.passed = false;
        c.detail = detail;
      }
    }
  }

  bool ValidSeat(int seat) const {
    return seat >= 0 && seat < static_cast<int>(roles_.size());
  }

  bool RequireAlive(const Event& e, int seat, const char* who) {
    if (!ValidSeat(seat)) {
      Fail(kCheckConservation, At(e) + "unknown seat " + std::to_string(seat));
      return false;
    }
    if (!alive_[seat]) {
      Fail(kCheckLiveness, At(e) + who + " seat " + std::to_string(seat) +
                               " is dead");
      return false;
    }
    return true;
  }

  void RequireStage(const Event& e, Stage stage, Phase phase) {
    if (stage_ != stage || e.phase != phase) {
      Fail(kCheckPhase, At(e) + std::string(EventKindName(e.body)) +
                            " outside its phase");
    }
  }

  int Count(Side side) const {
    int count = 0;
    for (std::size_t s = 0; s < roles_.size(); ++s) {
      if (alive_[s] && SideOf(roles_[s]) == side) ++count;
    }
    return count;
  }

  std::optional<Side> Winner() const {
    const int wolves = Count(Side::kWerewolves);
    if (wolves == 0) return Side::kVillagers;
    if (wolves >= Count(Side::kVillagers)) return Side::kWerewolves;
    return std::nullopt;
  }

  void Kill(const Event& e, int seat) {
    if (!RequireAlive(e, seat, "dying")) {
      Fail(kCheckConservation, At(e) + "seat " + std::to_string(seat) +
                                   " dies twice");
      return;
    }
    alive_[seat] = false;
    ++deaths_;
    expected_winner_ = Winner();
  }

  // Any event except GameEnded while a side has already won is unsound.
  void CheckNotWon(const Event& e) {
    if (expected_winner_) {
      Fail(kCheckWin, At(e) + "play continued after " +
                          std::string(SideName(*expected_winner_)) + " won");
    }
  }

  void On(const Event& e, const WerewolfKillChosen& b) {
    CheckNotWon(e);
    RequireStage(e, Stage::kNight, Phase::kNight);
    if (RequireAlive(e, b.lead, "killer") && roles_[b.lead] != Role::kWerewolf) {
      Fail(kCheckPhase, At(e) + "kill chosen by a non-werewolf");
    }
    if (RequireAlive(e, b.target, "kill target") &&
        roles_[b.target] == Role::kWerewolf) {
      Fail(kCheckPhase, At(e) + "werewolves targeted a werewolf");
    }
    kill_ = b.target;
  }

  void On(const Event& e, const DoctorProtected& b) {
    CheckNotWon(e);
    RequireStage(e, Stage::kNight, Phase::kNight);
    if (RequireAlive(e, b.doctor, "doctor") && roles_[b.doctor] != Role::kDoctor) {
      Fail(kCheckPhase, At(e) + "protection by a non-doctor");
    }
    RequireAlive(e, b.target, "protected player");
    if (b.target == b.doctor && !t_.config.doctor_may_self_save) {
      Fail(kCheckPhase, At(e) + "doctor protected itself");
    }
    save_ = b.target;
  }

  void On(const Event& e, const SeerResult& b) {
    CheckNotWon(e);
    RequireStage(e, Stage::kNight, Phase::kNight);
    if (RequireAlive(e, b.seer, "seer") && roles_[b.seer] != Role::kSeer) {
      Fail(kCheckPhase, At(e) + "investigation by a non-seer");
    }
    if (RequireAlive(e, b.target, "investigated player") &&
        roles_[b.target] != b.role) {
      Fail(kCheckPhase, At(e) + "seer result contradicts the deal");
    }
    if (b.target == b.seer) Fail(kCheckPhase, At(e) + "seer investigated itself");
  }

  void EndNight(const Event& e) {
    RequireStage(e, Stage::kNight, Phase::kNight);
    kill_.reset();
    save_.reset();
    stage_ = Stage::kDebate;
    turns_ = 0;
  }

  void On(const Event& e, const NightDeathAnnounced& b) {
    CheckNotWon(e);
    if (++night_deaths_[e.round] > 1) {
      Fail(kCheckSingleElimination, At(e) + "second night death");
    }
    if (kill_ != b.victim || save_ == b.victim) {
      Fail(kCheckConservation, At(e) + "night death does not follow the kill");
    }
    Kill(e, b.victim);
    EndNight(e);
  }

  void On(const Event& e, const NoDeathAnnounced&) {
    CheckNotWon(e);
    if (kill_ && kill_ != save_) {
      Fail(kCheckConservation, At(e) + "unprotected kill target survived");
    }
    EndNight(e);
  }

  void DebateTurn(const Event& e, int turn_index) {
    RequireStage(e, Stage::kDebate, Phase::kDayDebate);
    if (turn_index != turns_) {
      Fail(kCheckPhase, At(e) + "debate turn out of order");
    }
    if (++turns_ >= t_.config.debate_turns) {
      stage_ = Stage::kVote;
      votes_.clear();
    }
  }

  void On(const Event& e, const DebateUtterance& b) {
    CheckNotWon(e);
    RequireAlive(e, b.speaker, "speaker");
    if (b.text.empty()) Fail(kCheckPhase, At(e) + "empty utterance");
    DebateTurn(e, b.turn_index);
  }

  void On(const Event& e, const DebateTurnSkipped& b) {
    CheckNotWon(e);
    DebateTurn(e, b.turn_index);
  }

  void On(const Event& e, const VoteCast& b) {
    CheckNotWon(e);
    RequireStage(e, Stage::kVote, Phase::kDayVote);
    RequireAlive(e, b.voter, "voter");
    RequireAlive(e, b.target, "vote target");
    if (b.voter == b.target) Fail(kCheckPhase, At(e) + "self vote");
    if (!votes_.emplace(b.voter, b.target).second) {
      Fail(kCheckConservation, At(e) + "seat " + std::to_string(b.voter) +
                                   " voted twice");
    }
  }

  void On(const Event& e, const Eliminated& b) {
    CheckNotWon(e);
    RequireStage(e, Stage::kVote, Phase::kDayVote);
    if (++day_eliminations_[e.round] > 1) {
      Fail(kCheckSingleElimination,
           At(e) + "second elimination on day " + std::to_string(e.round));
    }
    int alive_count = 0;
    for (bool a : alive_) alive_count += a ? 1 : 0;
    if (static_cast<int>(votes_.size()) != alive_count) {
      Fail(kCheckConservation, At(e) + std::to_string(votes_.size()) +
                                   " votes from " +
                                   std::to_string(alive_count) + " players");
    }
    std::map<int, int> tally;
    for (auto [voter, target] : votes_) ++tally[target];
    int best = 0;
    for (auto [target, count] : tally) best = std::max(best, count);
    if (tally[b.target] != best) {
      Fail(kCheckConservation, At(e) + "eliminated player lacks a plurality");
    }
    if (b.revealed_role && ValidSeat(b.target) &&
        *b.revealed_role != roles_[b.target]) {
      Fail(kCheckConservation, At(e) + "revealed role contradicts the deal");
    }
    Kill(e, b.target);
    if (!expected_winner_) {
      if (round_ >= t_.config.max_rounds) {
        cap_reached_ = true;
      } else {
        ++round_;
        stage_ = Stage::kNight;
      }
    }
  }

  void On(const Event& e, const GameEnded& b) {
    if (ended_) Fail(kCheckTermination, At(e) + "second game end");
    ended_ = true;
    ended_event_ = b;
    if (b.truncated) {
      if (!cap_reached_ || expected_winner_ || b.winner) {
        Fail(kCheckWin, At(e) + "truncation without reaching the round cap");
      }
    } else if (b.winner != expected_winner_ || !b.winner) {
      Fail(kCheckWin, At(e) + "declared winner does not match the survivors");
    }
    stage_ = Stage::kOver;
  }

  void On(const Event& e, const StrategySelected& b) {
    if (!ValidSeat(b.player)) return Fail(kCheckConservation, At(e) + "bad seat");
    RequireAlive(e, b.player, "adapting player");
    if (++selections_[{b.player, b.moment.Ordinal()}] > 1) {
      Fail(kCheckPhase, At(e) + "two strategy selections at one moment");
    }
  }

  void On(const Event& e, const EstimationSnapshot& b) {
    if (!ValidSeat(b.observer)) {
      return Fail(kCheckConservation, At(e) + "bad seat");
    }
    RequireAlive(e, b.observer, "estimating player");
    if (b.snapshot_id < 0 ||
        b.snapshot_id >= static_cast<int>(t_.estimations.size())) {
      Fail(kCheckSequence, At(e) + "snapshot id without a record");
    }
  }

  void On(const Event&, const PolicyNotice&) {}

  void Finish() {
    const int n = static_cast<int>(roles_.size());
    int alive_count = 0;
    for (bool a : alive_) alive_count += a ? 1 : 0;
    if (alive_count + deaths_ != n) {
      Fail(kCheckConservation, "deaths and survivors do not add up");
    }
    if (!ended_) {
      Fail(kCheckTermination, "transcript has no game end");
      return;
    }
    if (round_ > t_.config.max_rounds) {
      Fail(kCheckTermination, "round cap exceeded");
    }
    if (t_.result) {
      if (t_.result->winner != ended_event_.winner ||
          t_.result->truncated != ended_event_.truncated ||
          t_.result->rounds_played != round_) {
        Fail(kCheckTermination, "result record disagrees with the events");
      }
    } else {
      Fail(kCheckTermination, "transcript has no result record");
    }
  }

  const Transcript& t_;
  ValidationReport report_;
  std::vector<Role> roles_;
  std::vector<bool> alive_;
  Stage stage_ = Stage::kNight;
  int round_ = 1;
  int turns_ = 0;
  int deaths_ = 0;
  std::optional<int> kill_, save_;
  std::map<int, int> votes_;
  std::map<int, int> night_deaths_, day_eliminations_;
  std::map<std::pair<int, int>, int> selections_;
  std::optional<Side> expected_winner_;
  bool cap_reached_ = false;
  bool ended_ = false;
  GameEnded ended_event_{std::nullopt, false};
};

}  // namespace

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const InvariantCheck& c) { return c.passed; });
}

const InvariantCheck& ValidationReport::Get(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no invariant named " + name);
}

ValidationReport ValidateTranscript(const Transcript& transcript) {
  return Validator(transcript).Run();
}

}  // namespace werewolf
