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

#ifndef WEREWOLF_SERVER_SERVER_H_
#define WEREWOLF_SERVER_SERVER_H_

#include <memory>
#include <string>

#include "werewolf/server/lobby.h"

namespace werewolf {

struct ServerOptions {
  std::string address = "127.0.0.1";
  unsigned short port = 8080;  // 0 picks a free port
  int io_threads = 2;
  LobbyOptions lobby;
};

// HTTP + WebSocket front end for a Lobby.
//
//   POST /games                       create a game (GameSpec body)
//   GET  /games                       lobby listing
//   GET  /games/{id}                  one game, with its result when done
//   GET  /games/{id}/transcript       JSONL transcript of a finished game
//   GET  /games/{id}/play             WebSocket: human seat
//   GET  /games/{id}/spectate[?debug=1]  WebSocket: spectator stream
class LiveServer {
 public:
  explicit LiveServer(ServerOptions options);
  ~LiveServer();
  LiveServer(const LiveServer&) = delete;
  LiveServer& operator=(const LiveServer&) = delete;

  // Binds and starts serving on background threads. Throws on bind failure.
  void Start();
  // The bound port (useful with port 0).
  unsigned short port() const;
  // Closes the listener and every connection, cancels running games.
  void Stop();
  // Blocks until Stop() is called from another thread or a signal arrives.
  void WaitForShutdown();

  Lobby& lobby();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace werewolf

#endif  // WEREWOLF_SERVER_SERVER_H_
