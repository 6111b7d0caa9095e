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

#include "werewolf/agents/synthetic_backend.h"

#include <array>
#include <sstream>
#include <vector>

#include "werewolf/game/rng.h"

namespace werewolf {

namespace {

// Comma-separated names following `label` on its own line of `text`.
std::vector<std::string> ListAfter(const std::string& text,
                                   const std::string& label) {
  std::vector<std::string> out;
  const auto pos = text.rfind("\n" + label);
  if (pos == std::string::npos) return out;
  const auto start = pos + 1 + label.size();
  const auto end = text.find('\n', start);
  std::stringstream line(text.substr(start, end - start));
  std::string item;
  while (std::getline(line, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(" .");
    if (b != std::string::npos && e != std::string::npos && e >= b) {
      out.push_back(item.substr(b, e - b + 1));
    }
  }
  return out;
}

std::string PurposeOf(const std::string& tag) {
  std::stringstream in(tag);
  std::string part;
  for (int i = 0; i < 3 && std::getline(in, part, '/'); ++i) {
  }
  return part;
}

constexpr std::array<const char*, 6> kLines = {
    "I think we should share what we saw last night before anyone votes.",
    "Nothing stood out to me yet, so I am listening carefully.",
    "Some of the accusations so far feel rushed to me.",
    "I agree with the last speaker; let us keep an open mind.",
    "Whoever stays quiet the longest worries me a little.",
    "I am on the Villager side and I want us to vote carefully.",
};

}  // namespace

ChatResponse SyntheticBackend::Complete(const ChatRequest& request) {
  std::uint64_t h = seed_;
  for (char c : RequestHash(request).substr(0, 16)) {
    h = MixSeed(h ^ static_cast<unsigned char>(c));
  }
  // A re-prompt repeats the options in its reminder, so scan every user turn.
  std::string context;
  for (const auto& m : request.messages) {
    if (m.role == ChatRole::kUser) context += "\n" + m.text;
  }
  const std::string purpose = PurposeOf(request.request_tag);

  std::string text;
  if (purpose == "night" || purpose == "vote") {
    const auto options = ListAfter(context, "Options: ");
    text = options.empty() ? "nobody" : options[h % options.size()];
  } else if (purpose == "bid") {
    text = std::to_string(h % 5);
  } else if (purpose == "speak") {
    text = kLines[h % kLines.size()];
  } else if (purpose == "estimate") {
    const auto names = ListAfter(context, "Players to estimate: ");
    std::string json = "{";
    for (std::size_t i = 0; i < names.size(); ++i) {
      h = MixSeed(h);
      int scores[4];
      for (int r = 0; r < 4; ++r) scores[r] = static_cast<int>((h >> (8 * r)) % 5);
      if (scores[0] + scores[1] + scores[2] + scores[3] == 0) scores[1] = 2;
      json += std::string(i ? ", " : "") + "\"" + names[i] +
              "\": {\"Werewolf\": " + std::to_string(scores[0]) +
              ", \"Villager\": " + std::to_string(scores[1]) +
              ", \"Seer\": " + std::to_string(scores[2]) +
              ", \"Doctor\": " + std::to_string(scores[3]) +
              ", \"reasoning\": \"synthetic\"}";
    }
    text = json + "}";
  } else if (purpose == "adapt") {
    text = (h % 2 == 0) ? "Strategy: Support\nReason: Staying inconspicuous."
                        : "Strategy: Attack\nReason: Pressing the suspects.";
  } else {
    text = "OK";
  }

  ChatResponse response;
  response.text = std::move(text);
  std::size_t chars = 0;
  for (const auto& m : request.messages) chars += m.text.size();
  response.usage = {static_cast<std::int64_t>(chars / 4),
                    static_cast<std::int64_t>(response.text.size() / 4)};
  response.backend_id = id();
  return response;
}

}  // namespace werewolf
