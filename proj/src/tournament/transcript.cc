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

#include "werewolf/tournament/transcript.h"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "werewolf/game/errors.h"
#include "werewolf/game/json_codec.h"

namespace werewolf {

namespace {

Json UsageToJson(const TokenUsage& usage) {
  return Json{{"prompt_tokens", usage.prompt_tokens},
              {"output_tokens", usage.output_tokens}};
}

Json EstimationToJson(const EstimateMatrix& m, int id) {
  Json rows = Json::array();
  for (const auto& [target, scores] : m.scores) {
    Json row{{"target", target}, {"forced", m.known_targets.count(target) > 0}};
    for (Role role : kAllRoles) row[std::string(RoleName(role))] = scores[role];
    auto why = m.reasoning.find(target);
    row["reasoning"] = why == m.reasoning.end() ? "" : why->second;
    rows.push_back(row);
  }
  return Json{{"type", "estimation"},
              {"id", id},
              {"observer", m.observer},
              {"moment", MomentToJson(m.moment)},
              {"measurement_only", m.measurement_only},
              {"fallback", m.fallback},
              {"rows", rows}};
}

EstimateMatrix EstimationFromJson(const Json& j) {
  EstimateMatrix m;
  m.observer = j.at("observer").get<int>();
  m.moment = MomentFromJson(j.at("moment"));
  m.measurement_only = j.at("measurement_only").get<bool>();
  m.fallback = j.at("fallback").get<bool>();
  for (const Json& row : j.at("rows")) {
    const int target = row.at("target").get<int>();
    RoleScores scores;
    for (Role role : kAllRoles) {
      scores[role] = row.at(std::string(RoleName(role))).get<int>();
    }
    m.scores[target] = scores;
    if (row.value("forced", false)) m.known_targets.insert(target);
    const std::string why = row.value("reasoning", "");
    if (!why.empty()) m.reasoning[target] = why;
  }
  return m;
}

Json HeaderToJson(const Transcript& t) {
  Json players = Json::array();
  for (const SeatInfo& p : t.players) {
    players.push_back({{"seat", p.seat},
                       {"name", p.name},
                       {"role", RoleName(p.role)},
                       {"policy", PolicyKindName(p.policy)}});
  }
  return Json{{"type", "header"},
              {"schema", kTranscriptSchema},
              {"game_id", t.game_id},
              {"label", t.label},
              {"seed", t.seed},
              {"config", ConfigToJson(t.config)},
              {"players", players},
              {"backend", t.backend}};
}

Json ResultToJson(const MatchSummary& r) {
  return Json{{"type", "result"},
              {"winner", r.winner ? Json(SideName(*r.winner)) : Json(nullptr)},
              {"truncated", r.truncated},
              {"rounds_played", r.rounds_played},
              {"usage", UsageToJson(r.usage)},
              {"requests", r.requests},
              {"illegal_actions", r.illegal_actions},
              {"fallbacks", r.fallbacks}};
}

template <typename Enum, typename Parse>
Enum ParseOrThrow(const Json& j, Parse parse, const char* what) {
  const std::string s = j.get<std::string>();
  auto v = parse(s);
  if (!v) throw TranscriptFormatError(std::string("unknown ") + what + " " + s);
  return *v;
}

}  // namespace

std::string SerializeTranscript(const Transcript& t) {
  std::string out = HeaderToJson(t).dump() + "\n";
  std::set<int> written;
  for (const Event& e : t.events) {
    if (const auto* snap = EventAs<EstimationSnapshot>(e)) {
      const int id = snap->snapshot_id;
      if (id >= 0 && id < static_cast<int>(t.estimations.size()) &&
          written.insert(id).second) {
        out += EstimationToJson(t.estimations[id], id).dump() + "\n";
      }
    }
    Json record = EventToJson(e);
    record["type"] = "event";
    out += record.dump() + "\n";
  }
  if (t.result) out += ResultToJson(*t.result).dump() + "\n";
  return out;
}

void WriteTranscript(const Transcript& t, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << SerializeTranscript(t);
  out.flush();
  if (!out) throw std::runtime_error("cannot write transcript " + path.string());
}

Transcript ParseTranscript(std::string_view text, std::string_view source) {
  Transcript t;
  std::map<int, EstimateMatrix> estimations;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    throw TranscriptFormatError(std::string(source) + ":" +
                                std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const Json j = Json::parse(line);
      const std::string type = j.at("type").get<std::string>();
      if (type == "header") {
        if (have_header) fail("duplicate header");
        if (j.at("schema").get<std::string>() != kTranscriptSchema) {
          fail("unsupported schema " + j["schema"].get<std::string>());
        }
        have_header = true;
        t.game_id = j.at("game_id").get<std::string>();
        t.label = j.value("label", "");
        t.seed = j.at("seed").get<std::uint64_t>();
        t.config = ConfigFromJson(j.at("config"));
        t.backend = j.value("backend", "");
        for (const Json& p : j.at("players")) {
          t.players.push_back(SeatInfo{
              p.at("seat").get<int>(), p.at("name").get<std::string>(),
              ParseOrThrow<Role>(p.at("role"), ParseRole, "role"),
              ParseOrThrow<PolicyKind>(p.at("policy"), ParsePolicyKind,
                                       "policy")});
        }
        continue;
      }
      if (!have_header) fail("record before header");
      if (type == "event") {
        t.events.push_back(EventFromJson(j));
      } else if (type == "estimation") {
        estimations[j.at("id").get<int>()] = EstimationFromJson(j);
      } else if (type == "result") {
        MatchSummary r;
        if (!j.at("winner").is_null()) {
          r.winner = ParseOrThrow<Side>(j["winner"], ParseSide, "side");
        }
        r.truncated = j.at("truncated").get<bool>();
        r.rounds_played = j.at("rounds_played").get<int>();
        r.usage.prompt_tokens = j.at("usage").value("prompt_tokens", 0);
        r.usage.output_tokens = j.at("usage").value("output_tokens", 0);
        r.requests = j.value("requests", 0);
        r.illegal_actions = j.value("illegal_actions", 0);
        r.fallbacks = j.value("fallbacks", 0);
        t.result = r;
      } else {
        fail("unknown record type " + type);
      }
    } catch (const Json::exception& e) {
      fail(e.what());
    } catch (const JsonFormatError& e) {
      fail(e.what());
    } catch (const ConfigError& e) {
      fail(e.what());
    }
  }
  if (!have_header) {
    line_no = std::max(line_no, 1);
    fail("missing header record");
  }
  for (auto& [id, m] : estimations) {
    if (id != static_cast<int>(t.estimations.size())) {
      throw TranscriptFormatError(std::string(source) +
                                  ": estimation ids are not contiguous");
    }
    t.estimations.push_back(std::move(m));
  }
  return t;
}

Transcript ReadTranscript(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TranscriptFormatError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseTranscript(buffer.str(), path.string());
}

std::string TranscriptFileName(std::string_view game_id) {
  return std::string(game_id) + ".transcript.jsonl";
}

std::string CassetteFileName(std::string_view game_id) {
  return std::string(game_id) + ".cassette.jsonl";
}

GameTrace ToGameTrace(const Transcript& t) {
  GameTrace trace;
  trace.game_id = t.game_id;
  if (t.result) trace.winner = t.result->winner;
  for (const SeatInfo& p : t.players) {
    trace.roles.push_back(p.role);
    trace.fixed_strategy.push_back(FixedStrategyOf(p.policy));
  }
  std::vector<bool> alive(t.players.size(), true);
  std::map<int, std::size_t> by_ordinal;  // moment ordinal -> index
  auto moment_at = [&](const AdaptationMoment& m) -> GameTrace::Moment& {
    auto [it, inserted] = by_ordinal.emplace(m.Ordinal(), trace.moments.size());
    if (inserted) {
      GameTrace::Moment entry;
      entry.moment = m;
      for (std::size_t s = 0; s < alive.size(); ++s) {
        if (alive[s]) entry.alive.push_back(static_cast<int>(s));
      }
      trace.moments.push_back(std::move(entry));
    }
    return trace.moments[it->second];
  };
  for (const Event& e : t.events) {
    if (const auto* d = EventAs<NightDeathAnnounced>(e)) {
      alive.at(d->victim) = false;
    } else if (const auto* x = EventAs<Eliminated>(e)) {
      alive.at(x->target) = false;
    } else if (const auto* s = EventAs<EstimationSnapshot>(e)) {
      moment_at(s->moment).matrices.push_back(t.estimations.at(s->snapshot_id));
    } else if (const auto* c = EventAs<StrategySelected>(e)) {
      moment_at(c->moment).selected[c->player] = c->strategy;
    }
  }
  return trace;
}

}  // namespace werewolf
