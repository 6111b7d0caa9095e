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

#include "werewolf/cli/cli.h"

#include <algorithm>
#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "werewolf/agents/synthetic_backend.h"
#include "werewolf/game/errors.h"
#include "werewolf/llm/cassette.h"
#include "werewolf/llm/http_backend.h"
#include "werewolf/server/server.h"
#include "werewolf/tournament/analyze.h"
#include "werewolf/tournament/match.h"
#include "werewolf/tournament/validate.h"

namespace werewolf {

namespace fs = std::filesystem;

BackendFactory MakeBackendFactory(const std::string& spec, std::uint64_t seed,
                                  const fs::path& record_dir) {
  BackendFactory inner;
  if (spec == "scripted") {
    inner = [seed](const std::string&) {
      return std::make_shared<SyntheticBackend>(seed);
    };
  } else if (spec == "http") {
    auto shared = std::make_shared<HttpChatBackend>(HttpBackendConfig::FromEnvironment());
    inner = [shared](const std::string&) { return shared; };
  } else if (spec.rfind("cassette:", 0) == 0) {
    const fs::path path = spec.substr(9);
    if (path.empty()) throw std::invalid_argument("cassette: needs a path");
    if (fs::is_directory(path)) {
      inner = [path](const std::string& game_id) {
        return std::make_shared<CassetteBackend>(CassetteMode::kReplay,
                                                 path / CassetteFileName(game_id));
      };
    } else {
      inner = [path](const std::string&) {
        return std::make_shared<CassetteBackend>(CassetteMode::kReplay, path);
      };
    }
  } else {
    throw std::invalid_argument("unknown backend '" + spec +
                                "' (expected scripted, http or cassette:PATH)");
  }
  if (record_dir.empty()) return inner;
  return [inner, record_dir](const std::string& game_id) -> std::shared_ptr<ChatBackend> {
    return std::make_shared<CassetteBackend>(
        CassetteMode::kRecord, record_dir / CassetteFileName(game_id), inner(game_id));
  };
}

namespace {

struct Options {
  std::uint64_t seed = 0;
  std::string backend = "scripted";
  std::string record;
  std::string villager_policy = "scripted";
  std::string werewolf_policy = "scripted";
  int n = 30;
  std::string out = ".";
  std::string in;
  std::string label;
  std::string preset;
  int jobs = 0;
  int max_rounds = 10;
  int debate_turns = 8;
  bool reveal_roles = false;
  bool no_doctor_self_save = false;
  std::string model = DecodingParams{}.model_name;
  double temperature = DecodingParams{}.temperature;
  int max_output_tokens = DecodingParams{}.max_output_tokens;
  std::string address = "127.0.0.1";
  unsigned short port = 8080;
  std::string transcript;
};

// Policy names accepted for offline play.
const CLI::Validator kPolicyName(
    [](std::string& value) -> std::string {
      auto kind = ParsePolicyKind(value);
      if (!kind) return "unknown policy '" + value + "'";
      if (*kind == PolicyKind::kHuman) return "human seats are only available in serve";
      return "";
    },
    "POLICY");

GameConfig GameConfigFrom(const Options& o) {
  GameConfig config;
  config.seed = o.seed;
  config.max_rounds = o.max_rounds;
  config.debate_turns = o.debate_turns;
  config.reveal_role_on_elimination = o.reveal_roles;
  config.doctor_may_self_save = !o.no_doctor_self_save;
  ValidateConfig(config);
  return config;
}

DecodingParams DecodingFrom(const Options& o) {
  DecodingParams d;
  d.model_name = o.model;
  d.temperature = o.temperature;
  d.max_output_tokens = o.max_output_tokens;
  return d;
}

bool NeedsBackend(PolicyKind a, PolicyKind b) { return IsLlmBacked(a) || IsLlmBacked(b); }

std::string Describe(const WinRateReport& r) {
  std::ostringstream s;
  s << r.label << ": n=" << r.n << " villagers=" << r.villager_wins
    << " werewolves=" << r.werewolf_wins << " truncated=" << r.truncated
    << " invalid=" << r.invalid << (r.unreliable ? " (unreliable)" : "");
  return s.str();
}

int RunGame(const Options& o, std::ostream& out, std::ostream& err) {
  const PolicyKind vp = *ParsePolicyKind(o.villager_policy);
  const PolicyKind wp = *ParsePolicyKind(o.werewolf_policy);
  BackendFactory factory = MakeBackendFactory(o.backend, o.seed, o.record);
  MatchSetup setup;
  setup.config = GameConfigFrom(o);
  setup.label = o.label.empty() ? "game" : o.label;
  setup.game_id = MatchGameId(setup.label, o.seed);
  setup.villager_policy = vp;
  setup.werewolf_policy = wp;
  setup.deps.decoding = DecodingFrom(o);
  if (NeedsBackend(vp, wp)) setup.deps.backend = factory(setup.game_id);
  const Transcript t = RunMatch(setup);
  const fs::path path = fs::path(o.out) / TranscriptFileName(setup.game_id);
  WriteTranscript(t, path);
  const MatchSummary& r = *t.result;
  err << setup.game_id << ": "
      << (r.winner ? std::string(SideName(*r.winner)) + " win" : "truncated")
      << " after " << r.rounds_played << " round(s), " << t.events.size()
      << " events, " << r.fallbacks << " fallback(s)\n";
  out << path.string() << "\n";
  return kExitOk;
}

int RunTournamentCommand(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n < 1) throw CLI::ValidationError("--n", "must be at least 1");
  TournamentConfig config;
  config.n_matches = o.n;
  config.base_seed = o.seed;
  config.game = GameConfigFrom(o);
  config.decoding = DecodingFrom(o);
  config.jobs = o.jobs;
  config.out_dir = o.out;
  config.backend = MakeBackendFactory(o.backend, o.seed, o.record);
  if (!o.preset.empty()) {
    auto cells = PresetByName(o.preset);
    if (!cells) throw CLI::ValidationError("--preset", "expected matrix or ablation");
    err << "running preset " << o.preset << ": " << cells->size() << " cells x "
        << o.n << " matches\n";
    const PresetReport report = RunPreset(*cells, config);
    for (const WinRateReport& cell : report.cells) err << Describe(cell) << "\n";
    out << report.ToCsv();
    return kExitOk;
  }
  config.villager_policy = *ParsePolicyKind(o.villager_policy);
  config.werewolf_policy = *ParsePolicyKind(o.werewolf_policy);
  config.label = o.label.empty() ? o.villager_policy + "-vs-" + o.werewolf_policy
                                 : o.label;
  if (!NeedsBackend(config.villager_policy, config.werewolf_policy)) {
    config.backend = nullptr;
  }
  const TournamentRun run = RunTournament(config);
  for (const MatchResult& m : run.matches) {
    if (!m.valid) err << m.game_id << ": invalid: " << m.error << "\n";
  }
  err << Describe(run.report) << "\n";
  out << (fs::path(o.out) / "report.json").string() << "\n";
  return run.report.n > 0 ? kExitOk : kExitFailure;
}

int AnalyzeCommand(const Options& o, std::ostream& out, std::ostream& err) {
  const AnalysisResult r = Analyze(o.in, o.out);
  for (const std::string& s : r.skipped) err << "skipped " << s << "\n";
  err << "read " << r.transcripts_read << " transcript(s), " << r.est_rows
      << " Est row(s)\n";
  for (const fs::path& p : r.written) out << p.string() << "\n";
  return kExitOk;
}

int ReplayCommand(const Options& o, std::ostream& out, std::ostream&) {
  const Transcript t = ReadTranscript(o.transcript);
  const ValidationReport report = ValidateTranscript(t);
  for (const InvariantCheck& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) out << ": " << c.detail;
    out << "\n";
  }
  return report.ok() ? kExitOk : kExitFailure;
}

int ServeCommand(const Options& o, std::ostream& out, std::ostream& err) {
  ServerOptions options;
  options.address = o.address;
  options.port = o.port;
  options.lobby.backend = MakeBackendFactory(o.backend, o.seed, o.record);
  options.lobby.decoding = DecodingFrom(o);
  options.lobby.out_dir = o.out;
  LiveServer server(options);
  server.Start();
  err << "serving on http://" << o.address << ":" << server.port() << "\n";
  out << server.port() << std::endl;
  server.WaitForShutdown();
  server.Stop();
  err << "stopped\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{"Werewolf agents: games, tournaments, analysis and a live server",
               "werewolf"};
  app.set_config("--config", "", "key=value file; command-line flags win");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("--seed", o.seed, "Seed (base seed for tournaments)");
  app.add_option("--backend", o.backend, "scripted | http | cassette:PATH");
  app.add_option("--record", o.record, "Record every match's traffic into this directory");
  app.add_option("--villager-policy", o.villager_policy, "Policy of the villager side")
      ->check(kPolicyName);
  app.add_option("--werewolf-policy", o.werewolf_policy, "Policy of the werewolf side")
      ->check(kPolicyName);
  app.add_option("--n", o.n, "Matches per configuration");
  app.add_option("--out", o.out, "Output directory");
  app.add_option("--label", o.label, "Run label (prefix of game ids)");
  app.add_option("--preset", o.preset, "matrix | ablation")
      ->check(CLI::IsMember({"matrix", "ablation"}));
  app.add_option("--jobs", o.jobs, "Parallel matches (0: one per CPU)");
  app.add_option("--max-rounds", o.max_rounds, "Round cap");
  app.add_option("--debate-turns", o.debate_turns, "Debate turns per day");
  app.add_flag("--reveal-roles", o.reveal_roles, "Announce roles on elimination");
  app.add_flag("--no-doctor-self-save", o.no_doctor_self_save,
               "Forbid the doctor from protecting itself");
  app.add_option("--model", o.model, "Model name sent to the backend");
  app.add_option("--temperature", o.temperature, "Sampling temperature");
  app.add_option("--max-output-tokens", o.max_output_tokens, "Reply length cap");
  app.add_option("--address", o.address, "Address to listen on");
  app.add_option("--port", o.port, "Port to listen on (0: any free port)");

  auto* run_game = app.add_subcommand("run-game", "Play one match and write its transcript");
  auto* run_tournament =
      app.add_subcommand("run-tournament", "Play a batch of matches or a preset");
  auto* analyze = app.add_subcommand("analyze", "Compute win rates and Est tables");
  analyze->add_option("--in", o.in, "Directory of transcripts")->required();
  auto* serve = app.add_subcommand("serve", "Run the live game server");
  auto* replay = app.add_subcommand("replay", "Re-validate a transcript");
  replay->add_option("transcript", o.transcript, "Transcript file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    if (*run_game) return RunGame(o, out, err);
    if (*run_tournament) return RunTournamentCommand(o, out, err);
    if (*analyze) return AnalyzeCommand(o, out, err);
    if (*serve) return ServeCommand(o, out, err);
    if (*replay) return ReplayCommand(o, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BackendConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMissingCredential;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace werewolf
