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

#ifndef WEREWOLF_TOURNAMENT_ANALYZE_H_
#define WEREWOLF_TOURNAMENT_ANALYZE_H_

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "werewolf/estimation/delta_est.h"
#include "werewolf/tournament/tournament.h"
#include "werewolf/tournament/transcript.h"

namespace werewolf {

class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnalysisResult {
  int transcripts_read = 0;
  std::vector<std::string> skipped;  // "<path>: <reason>"
  std::vector<WinRateReport> win_rates;  // one per label
  DeltaEstReport delta_est;
  int est_rows = 0;
  std::vector<std::filesystem::path> written;
};

// Win-rate table by label.
std::string WinRatesCsv(const std::vector<WinRateReport>& reports);
// game_id,round,moment,target_seat,target_role,est,n
std::string EstSeriesCsv(std::span<const Transcript> transcripts);
// Two outcome rows by the four strategy columns, means to 3 decimals.
std::string DeltaEstCsv(const DeltaEstReport& report);
// One line per bucket with its sample count.
std::string DeltaEstLongCsv(const DeltaEstReport& report);

// Reads every *.transcript.jsonl under `in_dir` (recursively), skipping
// unreadable ones, and writes win_rates.csv, est_timeseries.csv,
// delta_est.csv and delta_est_counts.csv into `out_dir`. Throws
// AnalysisError when nothing usable is found.
AnalysisResult Analyze(const std::filesystem::path& in_dir,
                       const std::filesystem::path& out_dir);

}  // namespace werewolf

#endif  // WEREWOLF_TOURNAMENT_ANALYZE_H_
