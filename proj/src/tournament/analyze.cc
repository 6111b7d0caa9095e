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

#include "werewolf/tournament/analyze.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

namespace werewolf {

namespace {

namespace fs = std::filesystem;

std::string Fixed(double v, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

void Write(const fs::path& path, const std::string& text,
           std::vector<fs::path>& written) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw AnalysisError("cannot write " + path.string());
  written.push_back(path);
}

bool IsTranscriptFile(const fs::path& p) {
  const std::string name = p.filename().string();
  const std::string suffix = ".transcript.jsonl";
  return name.size() > suffix.size() &&
         name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

std::string WinRatesCsv(const std::vector<WinRateReport>& reports) {
  std::string csv =
      "label,villager_policy,werewolf_policy,n,villager_win_rate,"
      "werewolf_win_rate,truncated_rate\n";
  for (const WinRateReport& r : reports) {
    csv += r.label + "," + std::string(PolicyKindName(r.villager_policy)) +
           "," + std::string(PolicyKindName(r.werewolf_policy)) + "," +
           std::to_string(r.n) + "," + Fixed(r.villager_win_rate, 3) + "," +
           Fixed(r.werewolf_win_rate, 3) + "," + Fixed(r.truncated_rate, 3) +
           "\n";
  }
  return csv;
}

std::string EstSeriesCsv(std::span<const Transcript> transcripts) {
  std::string csv = "game_id,round,moment,target_seat,target_role,est,n\n";
  for (const Transcript& t : transcripts) {
    const GameTrace trace = ToGameTrace(t);
    for (const EstReport& e : EstSeries(trace)) {
      csv += t.game_id + "," + std::to_string(e.moment.round) + "," +
             std::string(MomentKindName(e.moment.kind)) + "," +
             std::to_string(e.target) + "," +
             std::string(RoleName(trace.roles.at(e.target))) + "," +
             Fixed(e.est, 6) + "," + std::to_string(e.n) + "\n";
    }
  }
  return csv;
}

std::string DeltaEstCsv(const DeltaEstReport& report) {
  const std::vector<std::pair<StrategySource, Strategy>> columns = {
      {StrategySource::kAdaptation, Strategy::kSupport},
      {StrategySource::kAdaptation, Strategy::kAttack},
      {StrategySource::kFixed, Strategy::kSupport},
      {StrategySource::kFixed, Strategy::kAttack},
  };
  std::string csv = "outcome";
  for (auto [source, strategy] : columns) {
    csv += "," + report.At(source, strategy, Side::kVillagers).ColumnLabel();
  }
  csv += "\n";
  for (Side outcome : {Side::kVillagers, Side::kWerewolves}) {
    csv += outcome == Side::kVillagers ? "Villagers win" : "Werewolves win";
    for (auto [source, strategy] : columns) {
      csv += "," + Fixed(report.At(source, strategy, outcome).mean_delta, 3);
    }
    csv += "\n";
  }
  return csv;
}

std::string DeltaEstLongCsv(const DeltaEstReport& report) {
  std::string csv = "outcome,column,mean_delta,sample_count\n";
  for (const DeltaEstBucket& b : report.buckets) {
    csv += std::string(SideName(b.outcome)) + "," + b.ColumnLabel() + "," +
           Fixed(b.mean_delta, 6) + "," + std::to_string(b.sample_count) + "\n";
  }
  return csv;
}

AnalysisResult Analyze(const fs::path& in_dir, const fs::path& out_dir) {
  if (!fs::is_directory(in_dir)) {
    throw AnalysisError("not a directory: " + in_dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(in_dir)) {
    if (entry.is_regular_file() && IsTranscriptFile(entry.path())) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  AnalysisResult result;
  std::vector<Transcript> transcripts;
  for (const fs::path& f : files) {
    try {
      Transcript t = ReadTranscript(f);
      if (!t.result) throw TranscriptFormatError("no result record");
      transcripts.push_back(std::move(t));
    } catch (const std::exception& e) {
      result.skipped.push_back(f.string() + ": " + e.what());
    }
  }
  if (transcripts.empty()) {
    throw AnalysisError("no readable transcripts under " + in_dir.string());
  }
  result.transcripts_read = static_cast<int>(transcripts.size());

  std::map<std::string, std::vector<MatchResult>> by_label;
  std::map<std::string, std::pair<PolicyKind, PolicyKind>> policies;
  for (const Transcript& t : transcripts) {
    MatchResult m;
    m.game_id = t.game_id;
    m.valid = true;
    m.winner = t.result->winner;
    m.truncated = t.result->truncated;
    by_label[t.label].push_back(m);
    auto& [v, w] = policies[t.label];
    for (const SeatInfo& p : t.players) {
      (p.role == Role::kWerewolf ? w : v) = p.policy;
    }
  }
  for (const auto& [label, matches] : by_label) {
    result.win_rates.push_back(Aggregate(label, policies[label].first,
                                         policies[label].second, matches));
  }

  std::vector<GameTrace> traces;
  for (const Transcript& t : transcripts) traces.push_back(ToGameTrace(t));
  result.delta_est = ComputeDeltaEst(traces);

  fs::create_directories(out_dir);
  const std::string series = EstSeriesCsv(transcripts);
  result.est_rows =
      static_cast<int>(std::count(series.begin(), series.end(), '\n')) - 1;
  Write(out_dir / "win_rates.csv", WinRatesCsv(result.win_rates),
        result.written);
  Write(out_dir / "est_timeseries.csv", series, result.written);
  Write(out_dir / "delta_est.csv", DeltaEstCsv(result.delta_est),
        result.written);
  Write(out_dir / "delta_est_counts.csv", DeltaEstLongCsv(result.delta_est),
        result.written);
  return result;
}

}  // namespace werewolf
