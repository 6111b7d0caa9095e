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

#include "werewolf/llm/http_backend.h"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "httplib.h"
#include "werewolf/game/rng.h"

namespace werewolf {

using Json = nlohmann::json;

TokenBucket::TokenBucket(double per_second, double burst)
    : per_second_(per_second),
      burst_(std::max(1.0, burst)),
      tokens_(std::max(1.0, burst)),
      last_(Clock::now()) {}

void TokenBucket::Acquire() {
  if (per_second_ <= 0.0) return;
  std::unique_lock lock(mu_);
  for (;;) {
    const auto now = Clock::now();
    const double elapsed =
        std::chrono::duration<double>(now - last_).count();
    last_ = now;
    tokens_ = std::min(burst_, tokens_ + elapsed * per_second_);
    if (tokens_ >= 1.0) {
      tokens_ -= 1.0;
      return;
    }
    const double wait = (1.0 - tokens_) / per_second_;
    lock.unlock();
    std::this_thread::sleep_for(std::chrono::duration<double>(wait));
    lock.lock();
  }
}

HttpBackendConfig HttpBackendConfig::FromEnvironment() {
  HttpBackendConfig config;
  const char* key = std::getenv(kApiKeyEnv);
  if (key == nullptr || *key == '\0') {
    throw BackendConfigError(std::string("missing API key: set ") + kApiKeyEnv);
  }
  config.api_key = key;
  if (const char* base = std::getenv(kApiBaseEnv); base && *base) {
    config.base_url = base;
  }
  return config;
}

HttpChatBackend::HttpChatBackend(HttpBackendConfig config)
    : config_(std::move(config)),
      bucket_(config_.requests_per_second, config_.burst),
      jitter_state_(config_.jitter_seed) {
  if (config_.api_key.empty()) {
    throw BackendConfigError("http backend needs an API key");
  }
  const auto scheme_end = config_.base_url.find("://");
  if (scheme_end == std::string::npos) {
    throw BackendConfigError("base URL needs a scheme: " + config_.base_url);
  }
  const auto path_start = config_.base_url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) {
    scheme_host_port_ = config_.base_url;
  } else {
    scheme_host_port_ = config_.base_url.substr(0, path_start);
    path_prefix_ = config_.base_url.substr(path_start);
  }
  while (!path_prefix_.empty() && path_prefix_.back() == '/') {
    path_prefix_.pop_back();
  }
  if (!config_.sleep) {
    config_.sleep = [](std::chrono::milliseconds d) {
      std::this_thread::sleep_for(d);
    };
  }
}

int HttpChatBackend::attempts() const {
  std::lock_guard lock(mu_);
  return attempts_;
}

std::chrono::milliseconds HttpChatBackend::BackoffDelay(int attempt) {
  double factor = 0.0;
  {
    std::lock_guard lock(mu_);
    jitter_state_ = MixSeed(jitter_state_);
    factor = static_cast<double>(jitter_state_ >> 11) * 0x1.0p-53;  // [0,1)
  }
  const double base = static_cast<double>(config_.retry.base_delay.count()) *
                      static_cast<double>(1 << attempt);
  const double jittered = base * (1.0 + config_.retry.jitter * (2 * factor - 1));
  return std::chrono::milliseconds(
      static_cast<std::int64_t>(std::max(0.0, jittered)));
}

ChatResponse HttpChatBackend::Complete(const ChatRequest& request) {
  Json messages = Json::array();
  for (const auto& m : request.messages) {
    messages.push_back({{"role", ChatRoleName(m.role)}, {"content", m.text}});
  }
  const Json body{{"model", request.model_name},
                  {"messages", messages},
                  {"temperature", request.temperature},
                  {"max_tokens", request.max_output_tokens}};
  const std::string payload = body.dump();
  const std::string path = path_prefix_ + "/chat/completions";

  std::string last_error = "no attempt made";
  const int max_attempts = std::max(1, config_.retry.max_attempts);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    if (attempt > 0) config_.sleep(BackoffDelay(attempt - 1));
    bucket_.Acquire();
    {
      std::lock_guard lock(mu_);
      ++attempts_;
    }
    httplib::Client client(scheme_host_port_);
    client.set_connection_timeout(config_.timeout);
    client.set_read_timeout(config_.timeout);
    client.set_write_timeout(config_.timeout);
    httplib::Headers headers{{"Authorization", "Bearer " + config_.api_key}};

    const auto start = std::chrono::steady_clock::now();
    auto result = client.Post(path, headers, payload, "application/json");
    const double latency = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (!result) {
      last_error = "transport: " + httplib::to_string(result.error());
      continue;
    }
    const int status = result->status;
    if (status == 429 || status >= 500) {
      last_error = "http status " + std::to_string(status);
      continue;
    }
    if (status != 200) {
      return ChatResponse::Failure(id(), "http status " +
                                             std::to_string(status) + ": " +
                                             result->body.substr(0, 200));
    }
    try {
      const Json reply = Json::parse(result->body);
      ChatResponse response;
      response.text =
          reply.at("choices").at(0).at("message").at("content").get<std::string>();
      if (reply.contains("usage")) {
        response.usage.prompt_tokens = reply["usage"].value("prompt_tokens", 0);
        response.usage.output_tokens =
            reply["usage"].value("completion_tokens", 0);
      }
      response.latency_ms = latency;
      response.backend_id = id();
      return response;
    } catch (const Json::exception& e) {
      return ChatResponse::Failure(id(), std::string("bad response body: ") +
                                             e.what());
    }
  }
  return ChatResponse::Failure(id(), "retries exhausted: " + last_error);
}

}  // namespace werewolf
