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

#ifndef WEREWOLF_LLM_HTTP_BACKEND_H_
#define WEREWOLF_LLM_HTTP_BACKEND_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>

#include "werewolf/llm/chat.h"

namespace werewolf {

inline constexpr char kApiKeyEnv[] = "WEREWOLF_API_KEY";
inline constexpr char kApiBaseEnv[] = "WEREWOLF_API_BASE";
inline constexpr char kDefaultApiBase[] = "https://api.openai.com/v1";

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds base_delay{1000};
  double jitter = 0.25;  // +/- fraction of each delay
};

// Token bucket limiting request starts. A rate of zero disables limiting.
class TokenBucket {
 public:
  using Clock = std::chrono::steady_clock;

  TokenBucket(double per_second, double burst);
  void Acquire();

 private:
  std::mutex mu_;
  double per_second_;
  double burst_;
  double tokens_;
  Clock::time_point last_;
};

struct HttpBackendConfig {
  std::string base_url = kDefaultApiBase;  // e.g. https://host/v1
  std::string api_key;
  std::chrono::seconds timeout{60};
  RetryPolicy retry;
  double requests_per_second = 0.0;
  double burst = 4.0;
  std::uint64_t jitter_seed = 0;
  // Replaceable for tests.
  std::function<void(std::chrono::milliseconds)> sleep;

  // Reads WEREWOLF_API_KEY (required) and WEREWOLF_API_BASE (optional).
  // Throws BackendConfigError when no key is set.
  static HttpBackendConfig FromEnvironment();
};

// Chat-completions JSON over HTTP(S): POST {base_url}/chat/completions with
// {"model", "messages", "temperature", "max_tokens"}. Transport errors, 429
// and 5xx are retried with jittered exponential backoff; anything still
// failing comes back as a declared failure.
class HttpChatBackend : public ChatBackend {
 public:
  explicit HttpChatBackend(HttpBackendConfig config);

  ChatResponse Complete(const ChatRequest& request) override;
  std::string id() const override { return "http:" + config_.base_url; }

  // Number of HTTP attempts made so far (all requests).
  int attempts() const;

 private:
  std::chrono::milliseconds BackoffDelay(int attempt);

  HttpBackendConfig config_;
  std::string scheme_host_port_;
  std::string path_prefix_;
  TokenBucket bucket_;
  mutable std::mutex mu_;
  std::uint64_t jitter_state_;
  int attempts_ = 0;
};

}  // namespace werewolf

#endif  // WEREWOLF_LLM_HTTP_BACKEND_H_
