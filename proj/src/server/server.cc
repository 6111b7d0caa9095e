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

#include "werewolf/server/server.h"

#include <boost/asio/dispatch.hpp>
#include <boost/asio/ip/tcp.hpp>
#include <boost/asio/post.hpp>
#include <boost/asio/signal_set.hpp>
#include <boost/asio/strand.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <condition_variable>
#include <deque>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

namespace werewolf {

namespace {

namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
namespace net = boost::asio;
using tcp = net::ip::tcp;
using nlohmann::json;

using Request = http::request<http::string_body>;
using Response = http::response<http::string_body>;

struct Target {
  std::vector<std::string> segments;
  std::map<std::string, std::string> query;
};

std::string_view AsStd(beast::string_view s) { return {s.data(), s.size()}; }

Target ParseTarget(std::string_view target) {
  Target t;
  const auto q = target.find('?');
  std::string_view path = target.substr(0, q);
  if (q != std::string_view::npos) {
    std::string_view query = target.substr(q + 1);
    while (!query.empty()) {
      const auto amp = query.find('&');
      std::string_view pair = query.substr(0, amp);
      const auto eq = pair.find('=');
      t.query[std::string(pair.substr(0, eq))] =
          eq == std::string_view::npos ? "" : std::string(pair.substr(eq + 1));
      if (amp == std::string_view::npos) break;
      query.remove_prefix(amp + 1);
    }
  }
  while (!path.empty()) {
    const auto slash = path.find('/');
    if (slash != 0) t.segments.emplace_back(path.substr(0, slash));
    if (slash == std::string_view::npos) break;
    path.remove_prefix(slash + 1);
  }
  return t;
}

Response MakeResponse(const Request& req, http::status status, std::string body,
                      std::string_view content_type = "application/json") {
  Response res{status, req.version()};
  res.set(http::field::server, "werewolf-live");
  res.set(http::field::content_type,
          beast::string_view(content_type.data(), content_type.size()));
  res.set(http::field::access_control_allow_origin, "*");
  res.keep_alive(req.keep_alive());
  res.body() = std::move(body);
  res.prepare_payload();
  return res;
}

Response JsonResponse(const Request& req, http::status status, const json& body) {
  return MakeResponse(req, status, body.dump() + "\n");
}

Response ErrorResponse(const Request& req, http::status status,
                       const std::string& message) {
  return JsonResponse(req, status, json{{"error", message}});
}

Response HandleRest(Lobby& lobby, const Request& req) {
  const Target target = ParseTarget(AsStd(req.target()));
  const auto& s = target.segments;
  if (req.method() == http::verb::options) {
    Response res = MakeResponse(req, http::status::no_content, "");
    res.set(http::field::access_control_allow_methods, "GET, POST, OPTIONS");
    res.set(http::field::access_control_allow_headers, "Content-Type");
    return res;
  }
  if (s.empty() || s[0] != "games" || s.size() > 3) {
    return ErrorResponse(req, http::status::not_found, "no such resource");
  }
  if (s.size() == 1) {
    if (req.method() == http::verb::get) {
      return JsonResponse(req, http::status::ok, lobby.List());
    }
    if (req.method() != http::verb::post) {
      return ErrorResponse(req, http::status::method_not_allowed, "use GET or POST");
    }
    json body;
    try {
      body = req.body().empty() ? json::object() : json::parse(req.body());
    } catch (const json::exception& e) {
      return ErrorResponse(req, http::status::bad_request,
                           std::string("malformed JSON: ") + e.what());
    }
    try {
      auto game = lobby.Create(body);
      json out{{"game_id", game->id()},
               {"status", GameStatusName(game->status())},
               {"spectate", "/games/" + game->id() + "/spectate"}};
      if (game->spec().human_seat) {
        out["human_seat"] = *game->spec().human_seat;
        out["join_token"] = game->join_token();
        out["play"] = "/games/" + game->id() + "/play";
      }
      return JsonResponse(req, http::status::created, out);
    } catch (const RequestError& e) {
      return ErrorResponse(req, static_cast<http::status>(e.status()), e.what());
    }
  }
  auto game = lobby.Find(s[1]);
  if (!game) return ErrorResponse(req, http::status::not_found, "no such game");
  if (req.method() != http::verb::get) {
    return ErrorResponse(req, http::status::method_not_allowed, "use GET");
  }
  if (s.size() == 2) return JsonResponse(req, http::status::ok, game->Details());
  if (s[2] == "transcript") {
    auto text = game->TranscriptText();
    if (!text) {
      return ErrorResponse(req, http::status::conflict, "game has not finished");
    }
    return MakeResponse(req, http::status::ok, std::move(*text),
                        "application/x-ndjson");
  }
  return ErrorResponse(req, http::status::not_found, "no such resource");
}

// One WebSocket connection: a human seat or a spectator.
class WsSession : public MessageSink,
                  public std::enable_shared_from_this<WsSession> {
 public:
  WsSession(tcp::socket&& socket, std::weak_ptr<LiveGame> game, bool play,
            bool debug)
      : ws_(std::move(socket)), game_(std::move(game)), play_(play), debug_(debug) {}

  void Run(Request req) {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept(req, beast::bind_front_handler(&WsSession::OnAccept,
                                                    shared_from_this()));
  }

  void Send(std::string frame) override {
    net::post(ws_.get_executor(), [self = shared_from_this(), f = std::move(frame)]() mutable {
      self->queue_.push_back(std::move(f));
      if (self->queue_.size() == 1) self->DoWrite();
    });
  }

  void Close() override {
    net::post(ws_.get_executor(), [self = shared_from_this()] {
      self->closing_ = true;
      if (self->queue_.empty()) self->DoClose();
    });
  }

 private:
  void OnAccept(beast::error_code ec) {
    if (ec) return;
    auto game = game_.lock();
    if (!game) return;
    Send(HelloMessage(game->id(), play_ ? "play" : (debug_ ? "debug" : "spectate"))
             .dump());
    if (!play_) game->AddSpectator(shared_from_this(), debug_);
    DoRead();
  }

  void DoRead() {
    ws_.async_read(buffer_, beast::bind_front_handler(&WsSession::OnRead,
                                                      shared_from_this()));
  }

  void OnRead(beast::error_code ec, std::size_t) {
    auto game = game_.lock();
    if (ec) {
      if (game) {
        if (play_) {
          game->OnPlayerDisconnect(this);
        } else {
          game->RemoveSpectator(this);
        }
      }
      return;
    }
    const std::string text = beast::buffers_to_string(buffer_.data());
    buffer_.consume(buffer_.size());
    if (game && play_) HandlePlayerFrame(*game, text);
    DoRead();
  }

  void HandlePlayerFrame(LiveGame& game, const std::string& text) {
    json msg;
    try {
      msg = json::parse(text);
    } catch (const json::exception&) {
      Send(ErrorMessage("frames must be JSON objects").dump());
      return;
    }
    if (!msg.is_object()) {
      Send(ErrorMessage("frames must be JSON objects").dump());
      return;
    }
    if (!joined_) {
      if (msg.value("type", "") != "join_seat" || !msg.contains("seat") ||
          !msg["seat"].is_number_integer()) {
        Send(ErrorMessage("send join_seat with a seat and token first").dump());
        return;
      }
      auto error = game.JoinSeat(msg["seat"].get<int>(), msg.value("token", ""),
                                 shared_from_this());
      if (error) {
        Send(ErrorMessage(*error).dump());
        return;
      }
      joined_ = true;
      return;
    }
    game.OnPlayerMessage(this, msg);
  }

  void DoWrite() {
    ws_.text(true);
    ws_.async_write(net::buffer(queue_.front()),
                    beast::bind_front_handler(&WsSession::OnWrite,
                                              shared_from_this()));
  }

  void OnWrite(beast::error_code ec, std::size_t) {
    if (ec) {
      queue_.clear();
      return;
    }
    queue_.pop_front();
    if (!queue_.empty()) {
      DoWrite();
    } else if (closing_) {
      DoClose();
    }
  }

  void DoClose() {
    ws_.async_close(websocket::close_code::normal,
                    [self = shared_from_this()](beast::error_code) {});
  }

  websocket::stream<beast::tcp_stream> ws_;
  beast::flat_buffer buffer_;
  std::deque<std::string> queue_;
  std::weak_ptr<LiveGame> game_;
  const bool play_;
  const bool debug_;
  bool joined_ = false;
  bool closing_ = false;
};

class HttpSession : public std::enable_shared_from_this<HttpSession> {
 public:
  HttpSession(tcp::socket&& socket, Lobby& lobby)
      : stream_(std::move(socket)), lobby_(lobby) {}

  void Run() {
    net::dispatch(stream_.get_executor(),
                  beast::bind_front_handler(&HttpSession::DoRead, shared_from_this()));
  }

 private:
  void DoRead() {
    req_ = {};
    stream_.expires_after(std::chrono::seconds(30));
    http::async_read(stream_, buffer_, req_,
                     beast::bind_front_handler(&HttpSession::OnRead,
                                               shared_from_this()));
  }

  void OnRead(beast::error_code ec, std::size_t) {
    if (ec == http::error::end_of_stream) {
      stream_.socket().shutdown(tcp::socket::shutdown_send, ec);
      return;
    }
    if (ec) return;
    if (websocket::is_upgrade(req_)) {
      const Target target = ParseTarget(AsStd(req_.target()));
      const auto& s = target.segments;
      std::shared_ptr<LiveGame> game;
      if (s.size() == 3 && s[0] == "games" && (s[2] == "play" || s[2] == "spectate")) {
        game = lobby_.Find(s[1]);
      }
      if (!game) {
        return Write(ErrorResponse(req_, http::status::not_found, "no such game stream"));
      }
      auto it = target.query.find("debug");
      const bool debug = it != target.query.end() && it->second == "1";
      stream_.expires_never();
      std::make_shared<WsSession>(stream_.release_socket(), game, s[2] == "play",
                                  debug)
          ->Run(std::move(req_));
      return;
    }
    Write(HandleRest(lobby_, req_));
  }

  void Write(Response res) {
    auto sp = std::make_shared<Response>(std::move(res));
    http::async_write(stream_, *sp,
                      [self = shared_from_this(), sp](beast::error_code ec, std::size_t) {
                        if (ec) return;
                        if (!sp->keep_alive()) {
                          self->stream_.socket().shutdown(tcp::socket::shutdown_send, ec);
                          return;
                        }
                        self->DoRead();
                      });
  }

  beast::tcp_stream stream_;
  beast::flat_buffer buffer_;
  Request req_;
  Lobby& lobby_;
};

}  // namespace

struct LiveServer::Impl {
  explicit Impl(ServerOptions o)
      : options(std::move(o)), lobby(options.lobby), acceptor(ioc), signals(ioc) {}

  void Accept() {
    acceptor.async_accept(net::make_strand(ioc), [this](beast::error_code ec,
                                                        tcp::socket socket) {
      if (!acceptor.is_open()) return;
      if (!ec) std::make_shared<HttpSession>(std::move(socket), lobby)->Run();
      Accept();
    });
  }

  ServerOptions options;
  net::io_context ioc;
  Lobby lobby;
  tcp::acceptor acceptor;
  net::signal_set signals;
  std::vector<std::thread> threads;
  std::mutex mu;
  std::condition_variable cv;
  bool shutdown_requested = false;
  bool running = false;
};

LiveServer::LiveServer(ServerOptions options)
    : impl_(std::make_unique<Impl>(std::move(options))) {}

LiveServer::~LiveServer() { Stop(); }

void LiveServer::Start() {
  Impl& s = *impl_;
  const tcp::endpoint endpoint{net::ip::make_address(s.options.address),
                               s.options.port};
  s.acceptor.open(endpoint.protocol());
  s.acceptor.set_option(net::socket_base::reuse_address(true));
  s.acceptor.bind(endpoint);
  s.acceptor.listen(net::socket_base::max_listen_connections);
  s.signals.add(SIGINT);
  s.signals.add(SIGTERM);
  s.signals.async_wait([&s](beast::error_code ec, int) {
    if (ec) return;
    std::lock_guard lock(s.mu);
    s.shutdown_requested = true;
    s.cv.notify_all();
  });
  s.Accept();
  s.running = true;
  for (int i = 0; i < std::max(1, s.options.io_threads); ++i) {
    s.threads.emplace_back([&s] { s.ioc.run(); });
  }
}

unsigned short LiveServer::port() const {
  return impl_->acceptor.local_endpoint().port();
}

void LiveServer::Stop() {
  Impl& s = *impl_;
  if (!s.running) return;
  s.running = false;
  net::post(s.ioc, [&s] {
    beast::error_code ec;
    s.acceptor.close(ec);
    s.signals.cancel(ec);
  });
  s.lobby.Shutdown();
  s.ioc.stop();
  for (std::thread& t : s.threads) t.join();
  s.threads.clear();
  {
    std::lock_guard lock(s.mu);
    s.shutdown_requested = true;
  }
  s.cv.notify_all();
}

void LiveServer::WaitForShutdown() {
  std::unique_lock lock(impl_->mu);
  impl_->cv.wait(lock, [&] { return impl_->shutdown_requested; });
}

Lobby& LiveServer::lobby() { return impl_->lobby; }

}  // namespace werewolf
