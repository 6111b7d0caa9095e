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

#include "werewolf/tournament/tournament.h"

#include <atomic>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "werewolf/game/errors.h"
#include "werewolf/game/json_codec.h"
#include "werewolf/tournament/match.h"

namespace werewolf {

namespace {

namespace fs = std::filesystem;

Json ReportToJson(const WinRateReport& r) {
  return Json{{"label", r.label},
              {"villager_policy", PolicyKindName(r.villager_policy)},
              {"werewolf_policy", PolicyKindName(r.werewolf_policy)},
              {"n", r.n},
              {"villager_wins", r.villager_wins},
              {"werewolf_wins", r.werewolf_wins},
              {"truncated", r.truncated},
              {"invalid", r.invalid},
              {"villager_win_rate", r.villager_win_rate},
              {"werewolf_win_rate", r.werewolf_win_rate},
              {"truncated_rate", r.truncated_rate},
              {"unreliable", r.unreliable}};
}

std::string Fixed3(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << v;
  return out.str();
}

void WriteFile(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

MatchResult PlayOne(const TournamentConfig& config, std::uint64_t seed) {
  MatchResult result;
  result.seed = seed;
  result.game_id = MatchGameId(config.label, seed);
  try {
    MatchSetup setup;
    setup.config = config.game;
    setup.config.seed = seed;
    setup.game_id = result.game_id;
    setup.label = config.label;
    setup.villager_policy = config.villager_policy;
    setup.werewolf_policy = config.werewolf_policy;
    setup.deps.decoding = config.decoding;
    if (config.backend) setup.deps.backend = config.backend(result.game_id);
    Transcript t = RunMatch(setup);
    result.summary = *t.result;
    result.winner = t.result->winner;
    result.truncated = t.result->truncated;
    result.rounds_played = t.result->rounds_played;
    result.valid = true;
    if (!config.out_dir.empty()) {
      result.transcript_path =
          config.out_dir / "transcripts" / TranscriptFileName(result.game_id);
      WriteTranscript(t, result.transcript_path);
    }
    return result;
  } catch (const std::exception& e) {
    result.valid = false;
    result.error = e.what();
    return result;
  }
}

}  // namespace

std::string MatchGameId(const std::string& label, std::uint64_t seed) {
  return label + "-" + std::to_string(seed);
}

WinRateReport Aggregate(const std::string& label, PolicyKind villager_policy,
                        PolicyKind werewolf_policy,
                        const std::vector<MatchResult>& results) {
  WinRateReport r;
  r.label = label;
  r.villager_policy = villager_policy;
  r.werewolf_policy = werewolf_policy;
  for (const MatchResult& m : results) {
    if (!m.valid) {
      ++r.invalid;
      continue;
    }
    ++r.n;
    if (m.truncated || !m.winner) {
      ++r.truncated;
    } else if (*m.winner == Side::kVillagers) {
      ++r.villager_wins;
    } else {
      ++r.werewolf_wins;
    }
  }
  if (r.n > 0) {
    r.villager_win_rate = static_cast<double>(r.villager_wins) / r.n;
    r.werewolf_win_rate = static_cast<double>(r.werewolf_wins) / r.n;
    r.truncated_rate = static_cast<double>(r.truncated) / r.n;
  }
  const int total = r.n + r.invalid;
  r.unreliable = total == 0 || r.invalid * 10 > total;
  return r;
}

TournamentRun RunTournament(const TournamentConfig& config) {
  if (config.n_matches < 1) throw ConfigError("n_matches must be at least 1");
  ValidateConfig(config.game);
  const int n = config.n_matches;
  int jobs = config.jobs > 0 ? config.jobs
                             : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::clamp(jobs, 1, n);

  std::vector<MatchResult> results(n);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(i);
      results[i] = PlayOne(config, seed);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  TournamentRun run;
  run.report = Aggregate(config.label, config.villager_policy,
                         config.werewolf_policy, results);
  run.matches = std::move(results);

  if (!config.out_dir.empty()) {
    WriteFile(config.out_dir / "report.json",
              ReportToJson(run.report).dump(2) + "\n");
    std::string csv =
        "game_id,seed,valid,winner,truncated,rounds_played,illegal_actions,"
        "fallbacks,prompt_tokens,output_tokens,transcript,error\n";
    Json manifest{{"report", "report.json"},
                  {"matches", "matches.csv"},
                  {"transcripts", Json::array()}};
    for (const MatchResult& m : run.matches) {
      const std::string rel =
          m.transcript_path.empty()
              ? ""
              : fs::relative(m.transcript_path, config.out_dir).generic_string();
      std::string error = m.error;
      for (char& c : error) {
        if (c == ',' || c == '\n' || c == '"') c = ' ';
      }
      csv += m.game_id + "," + std::to_string(m.seed) + "," +
             (m.valid ? "1" : "0") + "," +
             (m.winner ? std::string(SideName(*m.winner)) : "") + "," +
             (m.truncated ? "1" : "0") + "," + std::to_string(m.rounds_played) +
             "," + std::to_string(m.summary.illegal_actions) + "," +
             std::to_string(m.summary.fallbacks) + "," +
             std::to_string(m.summary.usage.prompt_tokens) + "," +
             std::to_string(m.summary.usage.output_tokens) + "," + rel + "," +
             error + "\n";
      if (!rel.empty()) manifest["transcripts"].push_back(rel);
    }
    WriteFile(config.out_dir / "matches.csv", csv);
    WriteFile(config.out_dir / "manifest.json", manifest.dump(2) + "\n");
  }
  return run;
}

std::vector<PresetCell> MatrixPreset() {
  std::vector<PresetCell> cells;
  for (PolicyKind k : {PolicyKind::kImplicit, PolicyKind::kFixedSupport,
                       PolicyKind::kFixedAttack, PolicyKind::kAdaptive}) {
    const std::string name(PolicyKindName(k));
    cells.push_back({name, "Villagers", k, PolicyKind::kImplicit,
                     "matrix-villagers-" + name});
    cells.push_back({name, "Werewolves", PolicyKind::kImplicit, k,
                     "matrix-werewolves-" + name});
  }
  return cells;
}

std::vector<PresetCell> AblationPreset() {
  const std::vector<std::pair<std::string, PolicyKind>> rows = {
      {"Proposal", PolicyKind::kAdaptive},
      {"-Adaptation", PolicyKind::kEstimationOnly},
      {"-Estimation", PolicyKind::kAdaptiveWithoutEstimation},
      {"-Adaptation&Estimation", PolicyKind::kImplicit},
  };
  std::vector<PresetCell> cells;
  for (const auto& [row, k] : rows) {
    const std::string name(PolicyKindName(k));
    cells.push_back({row, "Villagers", k, PolicyKind::kImplicit,
                     "ablation-villagers-" + name});
    cells.push_back({row, "Werewolves", PolicyKind::kImplicit, k,
                     "ablation-werewolves-" + name});
  }
  return cells;
}

std::optional<std::vector<PresetCell>> PresetByName(const std::string& name) {
  if (name == "matrix") return MatrixPreset();
  if (name == "ablation") return AblationPreset();
  return std::nullopt;
}

std::string PresetReport::ToCsv() const {
  std::string csv = "setting";
  for (const auto& c : columns) csv += "," + c;
  csv += "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    csv += rows[r];
    for (std::size_t c = 0; c < columns.size(); ++c) {
      csv += "," + Fixed3(rate[r][c]);
    }
    csv += "\n";
  }
  return csv;
}

PresetReport RunPreset(const std::vector<PresetCell>& cells,
                       const TournamentConfig& base) {
  PresetReport report;
  report.columns = {"Villagers", "Werewolves"};
  for (const PresetCell& cell : cells) {
    if (std::find(report.rows.begin(), report.rows.end(), cell.row) ==
        report.rows.end()) {
      report.rows.push_back(cell.row);
      report.rate.emplace_back(report.columns.size(), 0.0);
    }
  }
  Json cells_json = Json::array();
  for (const PresetCell& cell : cells) {
    TournamentConfig config = base;
    config.label = cell.label;
    config.villager_policy = cell.villager_policy;
    config.werewolf_policy = cell.werewolf_policy;
    if (!base.out_dir.empty()) config.out_dir = base.out_dir / cell.label;
    TournamentRun run = RunTournament(config);
    const auto r = static_cast<std::size_t>(
        std::find(report.rows.begin(), report.rows.end(), cell.row) -
        report.rows.begin());
    const bool villagers = cell.column == "Villagers";
    report.rate[r][villagers ? 0 : 1] = villagers
                                            ? run.report.villager_win_rate
                                            : run.report.werewolf_win_rate;
    report.unreliable = report.unreliable || run.report.unreliable;
    Json j = ReportToJson(run.report);
    j["row"] = cell.row;
    j["column"] = cell.column;
    cells_json.push_back(j);
    report.cells.push_back(std::move(run.report));
  }
  if (!base.out_dir.empty()) {
    WriteFile(base.out_dir / "preset.csv", report.ToCsv());
    WriteFile(base.out_dir / "preset.json",
              Json{{"rows", report.rows},
                   {"columns", report.columns},
                   {"rate", report.rate},
                   {"unreliable", report.unreliable},
                   {"cells", cells_json}}
                      .dump(2) + "\n");
  }
  return report;
}

}  // namespace werewolf
