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

#ifndef WEREWOLF_TOURNAMENT_TOURNAMENT_H_
#define WEREWOLF_TOURNAMENT_TOURNAMENT_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "werewolf/agents/prompts.h"
#include "werewolf/llm/chat.h"
#include "werewolf/tournament/transcript.h"

namespace werewolf {

// Builds the backend for one match; receives the match's game id so
// per-match cassettes can be opened. May return nullptr for all-scripted
// matches.
using BackendFactory =
    std::function<std::shared_ptr<ChatBackend>(const std::string& game_id)>;

struct TournamentConfig {
  std::string label = "tournament";
  PolicyKind villager_policy = PolicyKind::kScripted;
  PolicyKind werewolf_policy = PolicyKind::kScripted;
  int n_matches = 30;
  std::uint64_t base_seed = 0;
  GameConfig game;  // seed is overwritten per match
  DecodingParams decoding;
  BackendFactory backend;
  std::filesystem::path out_dir;  // empty: keep transcripts in memory only
  int jobs = 0;                   // 0: one per hardware thread
};

struct MatchResult {
  std::string game_id;
  std::uint64_t seed = 0;
  bool valid = false;
  std::string error;  // why the match is invalid
  std::optional<Side> winner;
  int rounds_played = 0;
  bool truncated = false;
  std::filesystem::path transcript_path;
  MatchSummary summary;
};

struct WinRateReport {
  std::string label;
  PolicyKind villager_policy = PolicyKind::kScripted;
  PolicyKind werewolf_policy = PolicyKind::kScripted;
  int n = 0;  // valid matches
  int villager_wins = 0;
  int werewolf_wins = 0;
  int truncated = 0;
  int invalid = 0;
  double villager_win_rate = 0.0;
  double werewolf_win_rate = 0.0;
  double truncated_rate = 0.0;
  bool unreliable = false;  // more than 10% of matches were invalid
};

// Folds match results into rates; invalid matches are excluded.
WinRateReport Aggregate(const std::string& label, PolicyKind villager_policy,
                        PolicyKind werewolf_policy,
                        const std::vector<MatchResult>& results);

struct TournamentRun {
  WinRateReport report;
  std::vector<MatchResult> matches;  // in seed order
};

// Game id of match `index`: "<label>-<seed>".
std::string MatchGameId(const std::string& label, std::uint64_t seed);

// Runs the matches (seeds base_seed + i) on a thread pool. With an out_dir,
// writes each transcript plus report.json, matches.csv and manifest.json.
TournamentRun RunTournament(const TournamentConfig& config);

// One tournament configuration of a preset.
struct PresetCell {
  std::string row;     // "Proposal", "-Adaptation", ... or the policy name
  std::string column;  // "Villagers" or "Werewolves": the side under test
  PolicyKind villager_policy;
  PolicyKind werewolf_policy;
  std::string label;
};

// Each of Implicit, FixedSupport, FixedAttack and Adaptive on either side
// against Implicit opponents.
std::vector<PresetCell> MatrixPreset();
// Proposal, -Adaptation, -Estimation and -Adaptation&Estimation on either
// side against Implicit opponents.
std::vector<PresetCell> AblationPreset();
std::optional<std::vector<PresetCell>> PresetByName(const std::string& name);

struct PresetReport {
  std::vector<std::string> rows;
  std::vector<std::string> columns;  // {"Villagers", "Werewolves"}
  // rate[r][c]: win rate of the side under test.
  std::vector<std::vector<double>> rate;
  std::vector<WinRateReport> cells;
  bool unreliable = false;

  std::string ToCsv() const;
};

// Runs every cell with `base` as the template (label, policies and out_dir
// are set per cell; each cell writes into out_dir/<label>). Writes
// preset.csv and preset.json under base.out_dir when set.
PresetReport RunPreset(const std::vector<PresetCell>& cells,
                       const TournamentConfig& base);

}  // namespace werewolf

#endif  // WEREWOLF_TOURNAMENT_TOURNAMENT_H_
