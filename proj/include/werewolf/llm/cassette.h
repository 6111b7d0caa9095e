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

#ifndef WEREWOLF_LLM_CASSETTE_H_
#define WEREWOLF_LLM_CASSETTE_H_

#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "werewolf/llm/chat.h"

namespace werewolf {

enum class CassetteMode { kRecord, kReplay, kPassthrough };

// Record/replay wrapper. A cassette file is newline-delimited JSON, one
// record per request:
//   {"hash": "...", "request": {...}, "response": {...}}
// Replay serves the n-th occurrence of a hash from the n-th record with that
// hash and throws CassetteMissError on anything else; it never reaches a
// live backend. Record writes each record as soon as the response arrives.
// Passthrough forwards without touching the file.
class CassetteBackend : public ChatBackend {
 public:
  // `inner` is required for record and passthrough, ignored for replay.
  CassetteBackend(CassetteMode mode, std::filesystem::path path,
                  std::shared_ptr<ChatBackend> inner = nullptr);

  ChatResponse Complete(const ChatRequest& request) override;
  std::string id() const override;

  CassetteMode mode() const { return mode_; }
  int records() const;

 private:
  CassetteMode mode_;
  std::filesystem::path path_;
  std::shared_ptr<ChatBackend> inner_;
  mutable std::mutex mu_;
  std::ofstream out_;
  std::map<std::string, std::deque<ChatResponse>> replay_;
  int records_ = 0;
};

}  // namespace werewolf

#endif  // WEREWOLF_LLM_CASSETTE_H_
