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

#ifndef WEREWOLF_AGENTS_SYNTHETIC_BACKEND_H_
#define WEREWOLF_AGENTS_SYNTHETIC_BACKEND_H_

#include <cstdint>
#include <string>

#include "werewolf/llm/chat.h"

namespace werewolf {

// Offline stand-in for a language model. Reads the purpose from the request
// tag and answers in the requested format, choosing among the offered
// options by a hash of the request content, so the same prompt always gets
// the same answer. Lets every language-model policy run without a network.
class SyntheticBackend : public ChatBackend {
 public:
  explicit SyntheticBackend(std::uint64_t seed = 0) : seed_(seed) {}
  ChatResponse Complete(const ChatRequest& request) override;
  std::string id() const override { return "scripted"; }

 private:
  std::uint64_t seed_;
};

}  // namespace werewolf

#endif  // WEREWOLF_AGENTS_SYNTHETIC_BACKEND_H_
