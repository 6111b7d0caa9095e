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

#include "werewolf/llm/chat.h"

#include <openssl/sha.h>

#include <array>
#include <cctype>
#include <cstdio>

#include "werewolf/game/rng.h"

namespace werewolf {

using Json = nlohmann::json;

std::string_view ChatRoleName(ChatRole role) {
  switch (role) {
    case ChatRole::kSystem:
      return "system";
    case ChatRole::kUser:
      return "user";
    case ChatRole::kAssistant:
      return "assistant";
  }
  return "user";
}

namespace {

ChatRole ParseChatRole(const std::string& name) {
  if (name == "system") return ChatRole::kSystem;
  if (name == "assistant") return ChatRole::kAssistant;
  return ChatRole::kUser;
}

}  // namespace

ChatResponse ChatResponse::Failure(std::string backend_id, std::string error) {
  ChatResponse r;
  r.ok = false;
  r.backend_id = std::move(backend_id);
  r.error = std::move(error);
  return r;
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string RequestHash(const ChatRequest& request) {
  std::string canonical = request.model_name;
  canonical.push_back('\x1e');
  for (const auto& m : request.messages) {
    canonical.append(ChatRoleName(m.role));
    canonical.push_back('\x1f');
    canonical.append(CollapseWhitespace(m.text));
    canonical.push_back('\x1e');
  }
  std::array<unsigned char, SHA256_DIGEST_LENGTH> digest{};
  SHA256(reinterpret_cast<const unsigned char*>(canonical.data()),
         canonical.size(), digest.data());
  std::string hex;
  hex.reserve(digest.size() * 2);
  char buf[3];
  for (unsigned char b : digest) {
    std::snprintf(buf, sizeof(buf), "%02x", b);
    hex.append(buf);
  }
  return hex;
}

Json RequestToJson(const ChatRequest& request) {
  Json messages = Json::array();
  for (const auto& m : request.messages) {
    messages.push_back({{"role", ChatRoleName(m.role)}, {"content", m.text}});
  }
  return Json{{"messages", messages},
              {"model", request.model_name},
              {"temperature", request.temperature},
              {"max_output_tokens", request.max_output_tokens},
              {"request_tag", request.request_tag}};
}

ChatRequest RequestFromJson(const Json& j) {
  ChatRequest request;
  for (const auto& m : j.at("messages")) {
    request.messages.push_back(ChatMessage{
        ParseChatRole(m.at("role").get<std::string>()),
        m.at("content").get<std::string>()});
  }
  request.model_name = j.value("model", "");
  request.temperature = j.value("temperature", 0.7);
  request.max_output_tokens = j.value("max_output_tokens", 512);
  request.request_tag = j.value("request_tag", "");
  return request;
}

Json ResponseToJson(const ChatResponse& response) {
  return Json{{"ok", response.ok},
              {"text", response.text},
              {"usage",
               {{"prompt_tokens", response.usage.prompt_tokens},
                {"output_tokens", response.usage.output_tokens}}},
              {"backend_id", response.backend_id},
              {"error", response.error}};
}

ChatResponse ResponseFromJson(const Json& j) {
  ChatResponse r;
  r.ok = j.value("ok", true);
  r.text = j.value("text", "");
  if (j.contains("usage")) {
    r.usage.prompt_tokens = j["usage"].value("prompt_tokens", 0);
    r.usage.output_tokens = j["usage"].value("output_tokens", 0);
  }
  r.backend_id = j.value("backend_id", "");
  r.error = j.value("error", "");
  return r;
}

CannedBackend::CannedBackend(Responder responder, std::string id)
    : responder_(std::move(responder)), id_(std::move(id)) {}

std::shared_ptr<CannedBackend> CannedBackend::Constant(std::string text) {
  return std::make_shared<CannedBackend>(
      [text = std::move(text)](const ChatRequest&) {
        ChatResponse r;
        r.text = text;
        r.backend_id = "canned";
        return r;
      });
}

ChatResponse CannedBackend::Complete(const ChatRequest& request) {
  std::lock_guard lock(mu_);
  ChatResponse r = responder_(request);
  if (r.backend_id.empty()) r.backend_id = id_;
  return r;
}

GarbageBackend::GarbageBackend(std::uint64_t seed) : state_(seed) {}

ChatResponse GarbageBackend::Complete(const ChatRequest&) {
  static constexpr std::array<std::string_view, 30> kGarbage = {
      "",
      "   \n\t ",
      "???",
      "I bid seven",
      "99",
      "-3",
      "4 or 5",
      "Nobody",
      "Zed",
      "Will Will Jacob",
      "Will and Paul",
      "{not json",
      "{\"Zed\": {\"Werewolf\": 9}}",
      "{\"Will\": {\"Werewolf\": 5, \"Villager\": 0, \"Seer\": 0, "
      "\"Doctor\": 0}}",
      "{\"Will\": {\"Werewolf\": 0, \"Villager\": 0, \"Seer\": 0, "
      "\"Doctor\": 0}}",
      "[1, 2, 3]",
      "null",
      "support and attack",
      "maybe later",
      "Strategy: Defend",
      "Will",
      "Jacob",
      "Dan",
      "David",
      "Mason",
      "Hayley",
      "Ginger",
      "Paul",
      "\x01\x02\xff",
      "2.5",
  };
  std::lock_guard lock(mu_);
  state_ = MixSeed(state_);
  if (state_ % 8 == 0) return ChatResponse::Failure(id(), "injected failure");
  ChatResponse r;
  r.text = std::string(kGarbage[(state_ >> 8) % kGarbage.size()]);
  r.backend_id = id();
  return r;
}

ChatResponse UsageMeter::Complete(const ChatRequest& request) {
  ChatResponse r = inner_->Complete(request);
  std::lock_guard lock(mu_);
  total_ += r.usage;
  ++requests_;
  return r;
}

TokenUsage UsageMeter::total() const {
  std::lock_guard lock(mu_);
  return total_;
}

int UsageMeter::requests() const {
  std::lock_guard lock(mu_);
  return requests_;
}

}  // namespace werewolf
