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

#include "werewolf/agents/parsing.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "json.hpp"

namespace werewolf {

namespace {

using Json = nlohmann::json;

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool IsWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Whole-word, case-insensitive containment. `needle` must already be lower.
bool ContainsWord(const std::string& hay, const std::string& needle) {
  if (needle.empty()) return false;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + 1)) {
    const bool left = pos == 0 || !IsWordChar(hay[pos - 1]);
    const std::size_t end = pos + needle.size();
    const bool right = end == hay.size() || !IsWordChar(hay[end]);
    if (left && right) return true;
  }
  return false;
}

std::string Trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

std::optional<Strategy> LabelIn(const std::string& lower) {
  const bool support = lower.find("support") != std::string::npos;
  const bool attack = lower.find("attack") != std::string::npos;
  if (support == attack) return std::nullopt;
  return support ? Strategy::kSupport : Strategy::kAttack;
}

const Json* FindKeyInsensitive(const Json& object, std::string_view key) {
  const std::string want = Lower(key);
  for (auto it = object.begin(); it != object.end(); ++it) {
    if (Lower(it.key()) == want) return &it.value();
  }
  return nullptr;
}

}  // namespace

std::optional<int> ParseTargetAnswer(const Observation& obs,
                                     std::string_view text,
                                     std::span<const int> options) {
  const std::string hay = Lower(text);
  std::optional<int> found;
  for (int seat : options) {
    if (!ContainsWord(hay, Lower(obs.NameOf(seat)))) continue;
    if (found) return std::nullopt;  // several candidates named
    found = seat;
  }
  return found;
}

BidParse ParseBidAnswer(std::string_view text) {
  BidParse out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const bool digit = std::isdigit(static_cast<unsigned char>(text[i]));
    const bool negative = text[i] == '-' && i + 1 < text.size() &&
                          std::isdigit(static_cast<unsigned char>(text[i + 1]));
    if (!digit && !negative) continue;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(),
                                     value);
    out.parsed = true;
    if (ec == std::errc::result_out_of_range) {
      value = negative ? -1 : 1'000'000;
    }
    (void)ptr;
    const long long clamped = std::clamp<long long>(value, 0, 4);
    out.clamped = clamped != value;
    out.value = static_cast<int>(clamped);
    return out;
  }
  return out;
}

std::optional<Strategy> ParseStrategyAnswer(std::string_view text) {
  const std::string lower = Lower(text);
  std::size_t start = 0;
  while (start <= lower.size()) {
    std::size_t end = lower.find('\n', start);
    if (end == std::string::npos) end = lower.size();
    const std::string line = Trim(std::string_view(lower).substr(start, end - start));
    if (line.rfind("strategy:", 0) == 0) {
      if (auto label = LabelIn(line.substr(9))) return label;
      break;  // a labelled line without a usable label is not rescued
    }
    start = end + 1;
  }
  return LabelIn(lower);
}

std::string ParseRationale(std::string_view text) {
  const std::string lower = Lower(text);
  const auto pos = lower.find("reason:");
  if (pos != std::string::npos) return Trim(text.substr(pos + 7));
  return Trim(text);
}

std::variant<ParsedEstimates, std::string> ParseEstimateAnswer(
    const Observation& obs, std::string_view text,
    std::span<const int> targets) {
  const auto open = text.find('{');
  const auto close = text.rfind('}');
  if (open == std::string_view::npos || close == std::string_view::npos ||
      close < open) {
    return std::string("the answer contains no JSON object");
  }
  const Json j = Json::parse(text.substr(open, close - open + 1), nullptr,
                             /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    return std::string("the answer is not a valid JSON object");
  }
  ParsedEstimates out;
  for (int seat : targets) {
    const std::string& name = obs.NameOf(seat);
    const Json* entry = FindKeyInsensitive(j, name);
    if (entry == nullptr || !entry->is_object()) {
      return "missing scores for " + name;
    }
    RoleScores row;
    for (Role role : kAllRoles) {
      const Json* score = FindKeyInsensitive(*entry, RoleDisplayName(role));
      if (score == nullptr || !score->is_number_integer()) {
        return "missing integer " + std::string(RoleDisplayName(role)) +
               " score for " + name;
      }
      const auto v = score->get<long long>();
      if (v < kMinScore || v > kMaxScore) {
        return "score " + std::to_string(v) + " for " + name +
               " is outside 0 to 4";
      }
      row[role] = static_cast<int>(v);
    }
    try {
      ValidateRow(row);
    } catch (const InvalidEstimateError& e) {
      return "invalid scores for " + name + ": " + e.what();
    }
    out.rows[seat] = row;
    if (const Json* why = FindKeyInsensitive(*entry, "reasoning");
        why != nullptr && why->is_string()) {
      out.reasoning[seat] = why->get<std::string>();
    }
  }
  return out;
}

}  // namespace werewolf
