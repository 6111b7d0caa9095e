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

#ifndef WEREWOLF_AGENTS_PARSING_H_
#define WEREWOLF_AGENTS_PARSING_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "werewolf/estimation/estimate_matrix.h"
#include "werewolf/game/observation.h"

namespace werewolf {

// Resolves a free-text answer to one of `options` by player name. Accepts
// surrounding punctuation and filler ("I choose Jacob."), but rejects answers
// naming none or several of the options.
std::optional<int> ParseTargetAnswer(const Observation& obs,
                                     std::string_view text,
                                     std::span<const int> options);

struct BidParse {
  int value = 0;
  bool parsed = false;   // an integer was found
  bool clamped = false;  // it was outside 0..4
};
// First integer in the text, clamped to the bid range.
BidParse ParseBidAnswer(std::string_view text);

// Case-insensitive: a "Strategy:" line wins; otherwise the whole text must
// mention exactly one of "support" / "attack".
std::optional<Strategy> ParseStrategyAnswer(std::string_view text);
// Text after "Reason:", or the whole reply trimmed.
std::string ParseRationale(std::string_view text);

struct ParsedEstimates {
  std::map<int, RoleScores> rows;
  std::map<int, std::string> reasoning;
};
// Parses the estimation JSON reply for exactly `targets`. Tolerates code
// fences and prose around the object. The error string explains rejections
// so it can be fed back in a re-prompt.
std::variant<ParsedEstimates, std::string> ParseEstimateAnswer(
    const Observation& obs, std::string_view text,
    std::span<const int> targets);

}  // namespace werewolf

#endif  // WEREWOLF_AGENTS_PARSING_H_
