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

#include "werewolf/llm/cassette.h"

#include <string>

namespace werewolf {

using Json = nlohmann::json;

CassetteBackend::CassetteBackend(CassetteMode mode, std::filesystem::path path,
                                 std::shared_ptr<ChatBackend> inner)
    : mode_(mode), path_(std::move(path)), inner_(std::move(inner)) {
  switch (mode_) {
    case CassetteMode::kReplay: {
      std::ifstream in(path_);
      if (!in) {
        throw CassetteIoError("cannot open cassette " + path_.string());
      }
      std::string line;
      int line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
          const Json record = Json::parse(line);
          replay_[record.at("hash").get<std::string>()].push_back(
              ResponseFromJson(record.at("response")));
          ++records_;
        } catch (const Json::exception& e) {
          throw CassetteIoError(path_.string() + ":" +
                                std::to_string(line_no) + ": " + e.what());
        }
      }
      break;
    }
    case CassetteMode::kRecord:
      if (!inner_) throw BackendConfigError("record mode needs a live backend");
      if (path_.has_parent_path()) {
        std::filesystem::create_directories(path_.parent_path());
      }
      out_.open(path_, std::ios::out | std::ios::trunc);
      if (!out_) {
        throw CassetteIoError("cannot write cassette " + path_.string());
      }
      break;
    case CassetteMode::kPassthrough:
      if (!inner_) {
        throw BackendConfigError("passthrough mode needs a live backend");
      }
      break;
  }
}

std::string CassetteBackend::id() const {
  return "cassette:" + path_.filename().string();
}

int CassetteBackend::records() const {
  std::lock_guard lock(mu_);
  return records_;
}

ChatResponse CassetteBackend::Complete(const ChatRequest& request) {
  switch (mode_) {
    case CassetteMode::kPassthrough:
      return inner_->Complete(request);
    case CassetteMode::kReplay: {
      const std::string hash = RequestHash(request);
      std::lock_guard lock(mu_);
      auto it = replay_.find(hash);
      if (it == replay_.end() || it->second.empty()) {
        throw CassetteMissError("cassette miss for request '" +
                                request.request_tag + "' (hash " + hash +
                                ") in " + path_.string());
      }
      ChatResponse response = std::move(it->second.front());
      it->second.pop_front();
      response.latency_ms = 0.0;
      return response;
    }
    case CassetteMode::kRecord: {
      ChatResponse response = inner_->Complete(request);
      const Json record{{"hash", RequestHash(request)},
                        {"request", RequestToJson(request)},
                        {"response", ResponseToJson(response)}};
      std::lock_guard lock(mu_);
      out_ << record.dump() << '\n';
      out_.flush();
      if (!out_) {
        throw CassetteIoError("write failed for cassette " + path_.string());
      }
      ++records_;
      return response;
    }
  }
  return ChatResponse::Failure(id(), "unreachable");
}

}  // namespace werewolf
