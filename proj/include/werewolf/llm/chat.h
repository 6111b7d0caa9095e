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

#ifndef WEREWOLF_LLM_CHAT_H_
#define WEREWOLF_LLM_CHAT_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace werewolf {

enum class ChatRole { kSystem, kUser, kAssistant };

std::string_view ChatRoleName(ChatRole role);

struct ChatMessage {
  ChatRole role = ChatRole::kUser;
  std::string text;
};

struct ChatRequest {
  std::vector<ChatMessage> messages;
  std::string model_name;
  double temperature = 0.7;
  int max_output_tokens = 512;
  std::string request_tag;  // "<game>/<seat>/<purpose>/r<round>", for logs
};

struct TokenUsage {
  std::int64_t prompt_tokens = 0;
  std::int64_t output_tokens = 0;

  TokenUsage& operator+=(const TokenUsage& other) {
    prompt_tokens += other.prompt_tokens;
    output_tokens += other.output_tokens;
    return *this;
  }
};

struct ChatResponse {
  bool ok = true;  // false is a declared failure; text is then empty
  std::string text;
  TokenUsage usage;
  double latency_ms = 0.0;
  std::string backend_id;
  std::string error;

  static ChatResponse Failure(std::string backend_id, std::string error);
};

// Missing credentials or unusable backend settings.
class BackendConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A replay cassette had no record for a request. Never retried or swallowed:
// a replayed match that misses is invalid.
class CassetteMissError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CassetteIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text generation service. Implementations must be safe to call from several
// threads at once.
class ChatBackend {
 public:
  virtual ~ChatBackend() = default;

  // Returns a declared failure (ok == false) for recoverable trouble; throws
  // only for hard failures that should abort the match.
  virtual ChatResponse Complete(const ChatRequest& request) = 0;
  virtual std::string id() const = 0;
};

// Content key for a request: SHA-256 (hex) over the model name and each
// message's role and whitespace-collapsed text.
std::string RequestHash(const ChatRequest& request);

// Collapses runs of whitespace to one space and trims both ends.
std::string CollapseWhitespace(std::string_view text);

nlohmann::json RequestToJson(const ChatRequest& request);
ChatRequest RequestFromJson(const nlohmann::json& j);
nlohmann::json ResponseToJson(const ChatResponse& response);
ChatResponse ResponseFromJson(const nlohmann::json& j);

// Answers every request with a caller-supplied function.
class CannedBackend : public ChatBackend {
 public:
  using Responder = std::function<ChatResponse(const ChatRequest&)>;

  explicit CannedBackend(Responder responder, std::string id = "canned");
  // Convenience: always answer with fixed text.
  static std::shared_ptr<CannedBackend> Constant(std::string text);

  ChatResponse Complete(const ChatRequest& request) override;
  std::string id() const override { return id_; }

 private:
  Responder responder_;
  std::string id_;
  std::mutex mu_;
};

// Deterministic source of malformed output: garbage text, out-of-range
// numbers, names of nobody, broken JSON, and declared failures.
class GarbageBackend : public ChatBackend {
 public:
  explicit GarbageBackend(std::uint64_t seed);

  ChatResponse Complete(const ChatRequest& request) override;
  std::string id() const override { return "garbage"; }

 private:
  std::mutex mu_;
  std::uint64_t state_;
};

// Pass-through wrapper that totals token usage.
class UsageMeter : public ChatBackend {
 public:
  explicit UsageMeter(std::shared_ptr<ChatBackend> inner)
      : inner_(std::move(inner)) {}

  ChatResponse Complete(const ChatRequest& request) override;
  std::string id() const override { return inner_->id(); }

  TokenUsage total() const;
  int requests() const;

 private:
  std::shared_ptr<ChatBackend> inner_;
  mutable std::mutex mu_;
  TokenUsage total_;
  int requests_ = 0;
};

}  // namespace werewolf

#endif  // WEREWOLF_LLM_CHAT_H_
