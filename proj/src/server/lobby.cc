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

#include "werewolf/server/lobby.h"

#include <iomanip>
#include <random>
#include <sstream>

#include "werewolf/game/engine.h"
#include "werewolf/tournament/match.h"

namespace werewolf {

namespace {

using nlohmann::json;

// Thrown from the event hook to abort a cancelled game.
struct GameCancelled {};

std::string RandomToken() {
  std::random_device rd;
  std::ostringstream out;
  for (int i = 0; i < 4; ++i) {
    out << std::hex << std::setw(8) << std::setfill('0') << rd();
  }
  return out.str();
}

PolicyKind SeatPolicy(const GameSpec& spec, int seat, Role role) {
  auto it = spec.seat_overrides.find(seat);
  if (it != spec.seat_overrides.end()) return it->second;
  return SideOf(role) == Side::kWerewolves ? spec.werewolf_policy
                                           : spec.villager_policy;
}

}  // namespace

std::string_view GameStatusName(GameStatus status) {
  switch (status) {
    case GameStatus::kWaiting: return "waiting";
    case GameStatus::kRunning: return "running";
    case GameStatus::kFinished: return "finished";
  }
  return "unknown";
}

LiveGame::LiveGame(std::string id, std::string join_token, GameSpec spec,
                   PolicyDeps deps, std::filesystem::path out_dir)
    : id_(std::move(id)),
      join_token_(std::move(join_token)),
      spec_(std::move(spec)),
      deps_(std::move(deps)),
      out_dir_(std::move(out_dir)) {
  deps_.human = this;
  deps_.human_deadlines = spec_.deadlines;
}

LiveGame::~LiveGame() {
  Cancel();
  Join();
}

GameStatus LiveGame::status() const {
  std::lock_guard lock(mu_);
  return status_;
}

json LiveGame::LobbyEntry() const {
  std::lock_guard lock(mu_);
  json policies = json::object();
  const GameState deal = NewGame(spec_.config);
  json open = json::array();
  for (int seat = 0; seat < spec_.config.num_players(); ++seat) {
    const PolicyKind kind = SeatPolicy(spec_, seat, deal.players[seat].role);
    policies[std::to_string(seat)] = PolicyKindName(kind);
    if (kind == PolicyKind::kHuman && !player_ && !player_gone_) open.push_back(seat);
  }
  return {{"game_id", id_},
          {"status", GameStatusName(status_)},
          {"open_seats", open},
          {"policies", policies},
          {"player_names", spec_.config.player_names}};
}

json LiveGame::Details() const {
  json d = LobbyEntry();
  std::lock_guard lock(mu_);
  d["events"] = log_.size();
  d["seed"] = spec_.config.seed;
  if (!error_.empty()) d["error"] = error_;
  if (transcript_ && transcript_->result) {
    const MatchSummary& r = *transcript_->result;
    d["result"] = {{"winner", r.winner ? json(SideName(*r.winner)) : json(nullptr)},
                   {"truncated", r.truncated},
                   {"rounds_played", r.rounds_played}};
  }
  return d;
}

std::optional<std::string> LiveGame::TranscriptText() const {
  std::lock_guard lock(mu_);
  if (status_ != GameStatus::kFinished || !transcript_) return std::nullopt;
  return SerializeTranscript(*transcript_);
}

void LiveGame::StartIfReady() {
  std::lock_guard lock(mu_);
  if (started_ || cancelled_) return;
  if (spec_.human_seat && !player_) return;
  started_ = true;
  status_ = GameStatus::kRunning;
  thread_ = std::jthread([self = this] { self->Run(); });
}

std::optional<std::string> LiveGame::JoinSeat(int seat, const std::string& token,
                                             std::shared_ptr<MessageSink> sink) {
  {
    std::lock_guard lock(mu_);
    if (!spec_.human_seat || *spec_.human_seat != seat) {
      return "seat " + std::to_string(seat) + " is not a human seat";
    }
    if (token != join_token_) return "bad join token";
    if (player_ || player_gone_ || started_) return "seat already taken";
    player_ = std::move(sink);
    const GameState deal = NewGame(spec_.config);
    const Observation obs = Observe(deal, seat);
    SendToPlayer(SeatAssignedMessage(obs));
    SendToPlayer(ObservationMessage(obs, nullptr));
  }
  StartIfReady();
  return std::nullopt;
}

void LiveGame::SendToPlayer(const json& message) {
  if (player_) player_->Send(message.dump());
}

void LiveGame::OnPlayerMessage(const MessageSink* sink, const json& message) {
  std::lock_guard lock(mu_);
  if (!player_ || player_.get() != sink) return;
  const std::string type = message.value("type", "");
  if (type == "leave") {
    player_gone_ = true;
    player_.reset();
    cv_.notify_all();
    return;
  }
  if (type != "decision" || !message.contains("payload")) {
    SendToPlayer(ErrorMessage(type == "decision"
                                  ? "decision without a payload"
                                  : "unexpected message type '" + type + "'"));
    return;
  }
  const std::string id = message.value("id", "");
  if (!pending_ || pending_->id != id) {
    SendToPlayer(AckMessage(id, "discarded", "no open request with this id"));
    return;
  }
  const std::string kind = message.value("kind", "");
  if (!kind.empty() && kind != DecisionKindName(pending_->request.kind)) {
    SendToPlayer(AckMessage(id, "discarded", "kind does not match the request"));
    return;
  }
  inbox_ = message["payload"];
  cv_.notify_all();
}

void LiveGame::OnPlayerDisconnect(const MessageSink* sink) {
  std::lock_guard lock(mu_);
  if (!player_ || player_.get() != sink) return;
  player_gone_ = true;
  player_.reset();
  cv_.notify_all();
}

std::optional<json> LiveGame::Await(const DecisionRequest& request,
                                    const DecisionValidator& validate) {
  std::unique_lock lock(mu_);
  if (!player_ || cancelled_) return std::nullopt;
  const auto deadline = std::chrono::steady_clock::now() + request.deadline;
  auto open = [&] {
    pending_ = Pending{"d" + std::to_string(++next_request_), request};
    inbox_.reset();
    SendToPlayer(DecisionRequestMessage(pending_->id, request));
  };
  open();
  while (true) {
    const bool woke = cv_.wait_until(lock, deadline, [&] {
      return inbox_.has_value() || !player_ || cancelled_;
    });
    if (!player_ || cancelled_) {
      pending_.reset();
      return std::nullopt;
    }
    if (!woke) {
      SendToPlayer(DecisionTimeoutMessage(pending_->id));
      pending_.reset();
      return std::nullopt;
    }
    json payload = std::move(*inbox_);
    inbox_.reset();
    if (auto error = validate(payload)) {
      SendToPlayer(RejectedMessage(pending_->id, *error, request));
      open();
      continue;
    }
    SendToPlayer(AckMessage(pending_->id, "accepted"));
    pending_.reset();
    return payload;
  }
}

void LiveGame::AddSpectator(std::shared_ptr<MessageSink> sink, bool debug) {
  std::lock_guard lock(mu_);
  for (const Record& r : log_) {
    if (SpectatorSees(r.event, debug)) {
      sink->Send(SpectatorEventMessage(r.event, debug && r.snapshot ? &*r.snapshot
                                                                    : nullptr)
                     .dump());
    }
  }
  if (status_ == GameStatus::kFinished) {
    const MatchSummary* r =
        transcript_ && transcript_->result ? &*transcript_->result : nullptr;
    sink->Send(GameOverMessage(r ? r->winner : std::nullopt,
                               r ? r->truncated : false,
                               r ? r->rounds_played : 0, error_)
                   .dump());
  }
  spectators_.push_back({std::move(sink), debug});
}

void LiveGame::RemoveSpectator(const MessageSink* sink) {
  std::lock_guard lock(mu_);
  std::erase_if(spectators_,
                [&](const Spectator& s) { return s.sink.get() == sink; });
}

bool LiveGame::WaitFinished(std::chrono::milliseconds timeout) const {
  std::unique_lock lock(mu_);
  return cv_.wait_for(lock, timeout,
                      [&] { return status_ == GameStatus::kFinished; });
}

void LiveGame::Cancel() {
  std::lock_guard lock(mu_);
  cancelled_ = true;
  cv_.notify_all();
}

void LiveGame::Join() {
  if (thread_.joinable()) thread_.join();
}

void LiveGame::Publish(const Event& event, const GameState& state,
                       const EstimateMatrix* snapshot) {
  std::lock_guard lock(mu_);
  if (cancelled_) throw GameCancelled{};
  Record record{event, snapshot ? std::optional(*snapshot) : std::nullopt};
  for (const Spectator& s : spectators_) {
    if (SpectatorSees(event, s.debug)) {
      s.sink->Send(
          SpectatorEventMessage(event, s.debug ? snapshot : nullptr).dump());
    }
  }
  if (player_ && PlayerSees(event, *spec_.human_seat)) {
    SendToPlayer(ObservationMessage(Observe(state, *spec_.human_seat), &event));
  }
  log_.push_back(std::move(record));
}

void LiveGame::Run() {
  MatchSetup setup;
  setup.config = spec_.config;
  setup.game_id = id_;
  setup.label = "live";
  setup.villager_policy = spec_.villager_policy;
  setup.werewolf_policy = spec_.werewolf_policy;
  setup.seat_overrides = spec_.seat_overrides;
  setup.deps = deps_;
  setup.on_event = [this](const Event& e, const GameState& s,
                          const EstimateMatrix* m) { Publish(e, s, m); };
  try {
    Finish(RunMatch(setup), "");
  } catch (const GameCancelled&) {
    Finish(std::nullopt, "cancelled");
  } catch (const std::exception& e) {
    Finish(std::nullopt, e.what());
  }
}

void LiveGame::Finish(const std::optional<Transcript>& transcript,
                      const std::string& error) {
  if (transcript && !out_dir_.empty()) {
    try {
      WriteTranscript(*transcript, out_dir_ / TranscriptFileName(id_));
    } catch (const std::exception&) {
      // The transcript stays available over HTTP.
    }
  }
  std::lock_guard lock(mu_);
  transcript_ = transcript;
  error_ = error;
  status_ = GameStatus::kFinished;
  const MatchSummary* r =
      transcript_ && transcript_->result ? &*transcript_->result : nullptr;
  const std::string over =
      GameOverMessage(r ? r->winner : std::nullopt, r ? r->truncated : false,
                      r ? r->rounds_played : 0, error_)
          .dump();
  for (const Spectator& s : spectators_) s.sink->Send(over);
  if (player_) player_->Send(over);
  cv_.notify_all();
}

Lobby::Lobby(LobbyOptions options) : options_(std::move(options)) {}

Lobby::~Lobby() { Shutdown(); }

std::shared_ptr<LiveGame> Lobby::Create(const json& body) {
  GameSpec spec = ParseGameSpec(body);
  std::vector<PolicyKind> kinds = {spec.villager_policy, spec.werewolf_policy};
  for (const auto& [seat, kind] : spec.seat_overrides) kinds.push_back(kind);
  const bool needs_backend =
      std::any_of(kinds.begin(), kinds.end(), [](PolicyKind k) { return IsLlmBacked(k); });
  PolicyDeps deps;
  deps.decoding = options_.decoding;
  deps.seed = spec.config.seed;
  std::string id;
  {
    std::lock_guard lock(mu_);
    id = "live-" + std::to_string(next_id_++);
  }
  if (needs_backend) {
    if (!options_.backend) {
      throw RequestError(400, "this server has no language-model backend");
    }
    deps.backend = options_.backend(id);
  }
  auto game = std::make_shared<LiveGame>(id, RandomToken(), std::move(spec),
                                         std::move(deps), options_.out_dir);
  {
    std::lock_guard lock(mu_);
    games_[id] = game;
    order_.push_back(id);
  }
  game->StartIfReady();
  return game;
}

std::shared_ptr<LiveGame> Lobby::Find(const std::string& id) const {
  std::lock_guard lock(mu_);
  auto it = games_.find(id);
  return it == games_.end() ? nullptr : it->second;
}

json Lobby::List() const {
  std::vector<std::shared_ptr<LiveGame>> games;
  {
    std::lock_guard lock(mu_);
    for (const std::string& id : order_) games.push_back(games_.at(id));
  }
  json list = json::array();
  for (const auto& g : games) list.push_back(g->LobbyEntry());
  return {{"games", list}};
}

void Lobby::Shutdown() {
  std::map<std::string, std::shared_ptr<LiveGame>> games;
  {
    std::lock_guard lock(mu_);
    games.swap(games_);
    order_.clear();
  }
  for (auto& [id, game] : games) game->Cancel();
  for (auto& [id, game] : games) game->Join();
}

}  // namespace werewolf
