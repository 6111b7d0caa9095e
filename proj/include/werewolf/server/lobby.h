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

#ifndef WEREWOLF_SERVER_LOBBY_H_
#define WEREWOLF_SERVER_LOBBY_H_

#include <condition_variable>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "werewolf/agents/human_policy.h"
#include "werewolf/agents/policy_factory.h"
#include "werewolf/agents/prompts.h"
#include "werewolf/server/protocol.h"
#include "werewolf/tournament/tournament.h"

namespace werewolf {

// One client connection as seen by a game. Send() must not block: the
// transport queues the frame and writes it in order.
class MessageSink {
 public:
  virtual ~MessageSink() = default;
  virtual void Send(std::string frame) = 0;
  virtual void Close() = 0;
};

enum class GameStatus { kWaiting, kRunning, kFinished };
std::string_view GameStatusName(GameStatus status);

// A game hosted by the server: runs the ordinary match loop on its own
// thread and bridges the human seat, if any, to a client connection.
class LiveGame : public HumanDecisionSource,
                 public std::enable_shared_from_this<LiveGame> {
 public:
  LiveGame(std::string id, std::string join_token, GameSpec spec,
           PolicyDeps deps, std::filesystem::path out_dir);
  ~LiveGame() override;
  LiveGame(const LiveGame&) = delete;
  LiveGame& operator=(const LiveGame&) = delete;

  const std::string& id() const { return id_; }
  const std::string& join_token() const { return join_token_; }
  const GameSpec& spec() const { return spec_; }
  GameStatus status() const;

  // Lobby listing: game_id, status, open_seats, policies.
  nlohmann::json LobbyEntry() const;
  // LobbyEntry plus progress and, once finished, the result.
  nlohmann::json Details() const;
  // The full transcript; only available once the game has finished.
  std::optional<std::string> TranscriptText() const;

  // Starts the match thread; games with a human seat start on join.
  void StartIfReady();

  // Binds `sink` to the human seat. Returns an error message on failure.
  std::optional<std::string> JoinSeat(int seat, const std::string& token,
                                      std::shared_ptr<MessageSink> sink);
  // A frame from the human's connection (decision or leave).
  void OnPlayerMessage(const MessageSink* sink, const nlohmann::json& message);
  // The human's connection dropped; the seat plays scripted from now on.
  void OnPlayerDisconnect(const MessageSink* sink);

  // Sends the backlog of visible events and subscribes to the live tail.
  void AddSpectator(std::shared_ptr<MessageSink> sink, bool debug);
  void RemoveSpectator(const MessageSink* sink);

  // Blocks until the game has finished; false on timeout.
  bool WaitFinished(std::chrono::milliseconds timeout) const;
  // Makes a running game abort at its next event and releases the human.
  void Cancel();
  // Waits for the match thread; call after Cancel() or once finished.
  void Join();

  // HumanDecisionSource.
  std::optional<nlohmann::json> Await(const DecisionRequest& request,
                                      const DecisionValidator& validate) override;

 private:
  struct Record {
    Event event;
    std::optional<EstimateMatrix> snapshot;
  };
  struct Pending {
    std::string id;
    DecisionRequest request;
  };
  struct Spectator {
    std::shared_ptr<MessageSink> sink;
    bool debug;
  };

  void Run();
  void Publish(const Event& event, const GameState& state,
               const EstimateMatrix* snapshot);
  void Finish(const std::optional<Transcript>& transcript,
              const std::string& error);
  void SendToPlayer(const nlohmann::json& message);  // requires mu_

  const std::string id_;
  const std::string join_token_;
  const GameSpec spec_;
  PolicyDeps deps_;
  const std::filesystem::path out_dir_;

  mutable std::mutex mu_;
  mutable std::condition_variable cv_;
  GameStatus status_ = GameStatus::kWaiting;
  bool started_ = false;
  bool cancelled_ = false;
  std::vector<Record> log_;
  std::vector<Spectator> spectators_;
  std::shared_ptr<MessageSink> player_;
  bool player_gone_ = false;  // joined once and then left
  std::optional<Pending> pending_;
  std::optional<nlohmann::json> inbox_;
  int next_request_ = 0;
  std::optional<Transcript> transcript_;
  std::string error_;
  std::jthread thread_;
};

struct LobbyOptions {
  BackendFactory backend;  // nullptr: LLM-backed policies are refused
  DecodingParams decoding;
  std::filesystem::path out_dir;  // finished transcripts; empty: memory only
};

// Registry of live games; safe for concurrent use.
class Lobby {
 public:
  explicit Lobby(LobbyOptions options);
  ~Lobby();

  // Parses a POST /games body, registers and (if no human seat) starts the
  // game. Throws RequestError.
  std::shared_ptr<LiveGame> Create(const nlohmann::json& body);
  std::shared_ptr<LiveGame> Find(const std::string& id) const;
  nlohmann::json List() const;
  // Cancels every game and waits for their threads.
  void Shutdown();

 private:
  LobbyOptions options_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<LiveGame>> games_;
  std::vector<std::string> order_;
  int next_id_ = 1;
};

}  // namespace werewolf

#endif  // WEREWOLF_SERVER_LOBBY_H_
