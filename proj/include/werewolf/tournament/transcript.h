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

#ifndef WEREWOLF_TOURNAMENT_TRANSCRIPT_H_
#define WEREWOLF_TOURNAMENT_TRANSCRIPT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "werewolf/agents/policy.h"
#include "werewolf/estimation/delta_est.h"
#include "werewolf/estimation/estimate_matrix.h"
#include "werewolf/game/config.h"
#include "werewolf/game/event.h"
#include "werewolf/llm/chat.h"

namespace werewolf {

inline constexpr std::string_view kTranscriptSchema = "werewolf.transcript/1";

class TranscriptFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SeatInfo {
  int seat = 0;
  std::string name;
  Role role = Role::kVillager;
  PolicyKind policy = PolicyKind::kScripted;
};

struct MatchSummary {
  std::optional<Side> winner;
  bool truncated = false;
  int rounds_played = 0;
  TokenUsage usage;
  int requests = 0;
  int illegal_actions = 0;  // agent decisions the runner had to replace
  int fallbacks = 0;        // policy notices of any kind
};

struct Transcript {
  std::string game_id;
  std::string label;
  std::uint64_t seed = 0;
  GameConfig config;
  std::vector<SeatInfo> players;
  std::string backend;
  std::vector<Event> events;                // full log, internal included
  std::vector<EstimateMatrix> estimations;  // indexed by snapshot_id
  std::optional<MatchSummary> result;
};

// Newline-delimited JSON: a header record, then events in order with each
// estimation record placed just before the event that announces it, then a
// result record. No wall-clock data, so equal matches serialize equally.
std::string SerializeTranscript(const Transcript& transcript);
void WriteTranscript(const Transcript& transcript,
                     const std::filesystem::path& path);

// Throws TranscriptFormatError naming `source` and the line number.
Transcript ParseTranscript(std::string_view text, std::string_view source);
Transcript ReadTranscript(const std::filesystem::path& path);

std::string TranscriptFileName(std::string_view game_id);
std::string CassetteFileName(std::string_view game_id);

// The estimation view of a finished match.
GameTrace ToGameTrace(const Transcript& transcript);

}  // namespace werewolf

#endif  // WEREWOLF_TOURNAMENT_TRANSCRIPT_H_
