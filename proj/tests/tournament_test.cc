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

#include <algorithm>
#include <map>

#include "doctest.h"
#include "test_support.h"
#include "werewolf/agents/synthetic_backend.h"
#include "werewolf/game/errors.h"
#include "werewolf/game/json_codec.h"
#include "werewolf/llm/cassette.h"
#include "werewolf/tournament/analyze.h"
#include "werewolf/tournament/match.h"
#include "werewolf/tournament/tournament.h"
#include "werewolf/tournament/validate.h"

namespace werewolf {
namespace {

namespace fs = std::filesystem;
using testing::FixedConfig;
using testing::ReadFile;
using testing::ScratchDir;

const fs::path kScriptedGolden = "fixtures/scripted_fixed_roles.transcript.jsonl";
const fs::path kCassetteFixture =
    fs::path("fixtures") / CassetteFileName("adaptive-vs-implicit-7");
const fs::path kCassetteTranscript =
    fs::path("fixtures") / TranscriptFileName("adaptive-vs-implicit-7");

MatchSetup ScriptedSetup(GameConfig config, std::string id = "scripted") {
  MatchSetup setup;
  setup.config = std::move(config);
  setup.game_id = std::move(id);
  setup.label = "scripted";
  return setup;
}

MatchSetup CassetteSetup(std::shared_ptr<ChatBackend> backend) {
  MatchSetup setup;
  setup.config.seed = 7;
  setup.game_id = "adaptive-vs-implicit-7";
  setup.label = "adaptive-vs-implicit";
  setup.villager_policy = PolicyKind::kImplicit;
  setup.werewolf_policy = PolicyKind::kAdaptive;
  setup.deps.backend = std::move(backend);
  return setup;
}

template <typename T>
std::vector<const T*> All(const Transcript& t) {
  std::vector<const T*> out;
  for (const Event& e : t.events) {
    if (const T* b = EventAs<T>(e)) out.push_back(b);
  }
  return out;
}

TEST_CASE("scripted fixed-role match follows the hand simulation") {
  const Transcript t = RunMatch(ScriptedSetup(FixedConfig()));
  const auto deaths = All<NightDeathAnnounced>(t);
  const auto eliminated = All<Eliminated>(t);
  REQUIRE(deaths.size() == 2);
  REQUIRE(eliminated.size() == 2);
  CHECK(deaths[0]->victim == 0);
  CHECK(eliminated[0]->target == 1);
  CHECK(deaths[1]->victim == 2);
  CHECK(eliminated[1]->target == 3);
  REQUIRE(t.result.has_value());
  CHECK(t.result->winner == Side::kWerewolves);
  CHECK(t.result->rounds_played == 2);
  CHECK_FALSE(t.result->truncated);
  CHECK(t.result->illegal_actions == 0);
  // The seer holds the floor every turn with its bid of 2.
  for (const auto* u : All<DebateUtterance>(t)) CHECK(u->speaker == 4);
  CHECK(ValidateTranscript(t).ok());

  const std::string text = SerializeTranscript(t);
  if (testing::UpdateFixtures()) testing::WriteFile(kScriptedGolden, text);
  CHECK(text == ReadFile(kScriptedGolden));
}

TEST_CASE("same seed gives byte-identical transcripts") {
  GameConfig config;
  config.seed = 4242;
  const std::string first = SerializeTranscript(RunMatch(ScriptedSetup(config)));
  for (int i = 0; i < 5; ++i) {
    CHECK(SerializeTranscript(RunMatch(ScriptedSetup(config))) == first);
  }
  config.seed = 4243;
  CHECK(SerializeTranscript(RunMatch(ScriptedSetup(config))) != first);
}

TEST_CASE("round cap truncates a match with no winner") {
  GameConfig config = FixedConfig();
  config.max_rounds = 1;
  const Transcript t = RunMatch(ScriptedSetup(config));
  CHECK(t.result->truncated);
  CHECK_FALSE(t.result->winner.has_value());
  CHECK(t.result->rounds_played == 1);
  const auto ended = All<GameEnded>(t);
  REQUIRE(ended.size() == 1);
  CHECK(ended[0]->truncated);
  CHECK(ValidateTranscript(t).ok());
}

TEST_CASE("language-model match records estimates and strategies") {
  MatchSetup setup = CassetteSetup(std::make_shared<SyntheticBackend>());
  const Transcript t = RunMatch(setup);
  CHECK(ValidateTranscript(t).ok());
  CHECK(t.result->illegal_actions == 0);
  CHECK(t.result->requests > 0);
  CHECK(t.result->usage.prompt_tokens > 0);

  // Every alive werewolf adapts at least once per round it survives to a
  // moment, and never more than three times per round.
  std::map<std::pair<int, int>, int> per_round;
  for (const auto* s : All<StrategySelected>(t)) {
    CHECK(t.players[s->player].role == Role::kWerewolf);
    ++per_round[{s->player, s->moment.round}];
  }
  for (const auto& [key, count] : per_round) CHECK(count <= 3);
  for (const SeatInfo& p : t.players) {
    if (p.role == Role::kWerewolf) CHECK(per_round.count({p.seat, 1}) == 1);
  }

  // Implicit villagers estimate for measurement only.
  for (const auto* s : All<EstimationSnapshot>(t)) {
    const bool wolf = t.players[s->observer].role == Role::kWerewolf;
    CHECK(s->measurement_only == !wolf);
    CHECK(t.estimations.at(s->snapshot_id).observer == s->observer);
  }
  CHECK_FALSE(t.estimations.empty());

  const std::string text = SerializeTranscript(t);
  CHECK(SerializeTranscript(ParseTranscript(text, "mem")) == text);
}

TEST_CASE("recorded cassette replays to the identical transcript") {
  const fs::path dir = ScratchDir("cassette_roundtrip");
  const fs::path path = dir / CassetteFileName("adaptive-vs-implicit-7");
  std::string recorded;
  {
    auto recorder = std::make_shared<CassetteBackend>(
        CassetteMode::kRecord, path, std::make_shared<SyntheticBackend>());
    recorded = SerializeTranscript(RunMatch(CassetteSetup(recorder)));
  }
  auto replay = std::make_shared<CassetteBackend>(CassetteMode::kReplay, path);
  CHECK(SerializeTranscript(RunMatch(CassetteSetup(replay))) == recorded);

  if (testing::UpdateFixtures()) {
    fs::copy_file(path, kCassetteFixture, fs::copy_options::overwrite_existing);
    testing::WriteFile(kCassetteTranscript, recorded);
  }
}

TEST_CASE("committed cassette fixture replays offline") {
  auto replay =
      std::make_shared<CassetteBackend>(CassetteMode::kReplay, kCassetteFixture);
  const Transcript t = RunMatch(CassetteSetup(replay));
  CHECK(SerializeTranscript(t) == ReadFile(kCassetteTranscript));
  const GameTrace trace = ToGameTrace(t);
  const DeltaEstReport report = ComputeDeltaEst(std::span(&trace, 1));
  CHECK(report.buckets.size() == 8);
}

TEST_CASE("a cassette miss aborts the match") {
  const fs::path dir = ScratchDir("cassette_miss");
  const fs::path path = dir / "empty.cassette.jsonl";
  { CassetteBackend recorder(CassetteMode::kRecord, path, CannedBackend::Constant("x")); }
  auto replay = std::make_shared<CassetteBackend>(CassetteMode::kReplay, path);
  CHECK_THROWS_AS(RunMatch(CassetteSetup(replay)), CassetteMissError);
}

TEST_CASE("garbage backend output never reaches the engine") {
  int fallbacks = 0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    MatchSetup setup;
    setup.config.seed = seed;
    setup.game_id = "fuzz";
    setup.villager_policy = PolicyKind::kAdaptive;
    setup.werewolf_policy = PolicyKind::kFixedAttack;
    setup.deps.backend = std::make_shared<GarbageBackend>(seed);
    const Transcript t = RunMatch(setup);
    CHECK(t.result->illegal_actions == 0);
    CHECK(ValidateTranscript(t).ok());
    fallbacks += t.result->fallbacks;
    CHECK(t.result->fallbacks ==
          static_cast<int>(All<PolicyNotice>(t).size()));
  }
  CHECK(fallbacks > 0);
}

// A policy that always answers with a dead or self target.
TEST_CASE("illegal agent decisions are replaced and counted") {
  MatchSetup setup = ScriptedSetup(FixedConfig());
  setup.seat_overrides[1] = PolicyKind::kImplicit;
  setup.deps.backend = CannedBackend::Constant("Jacob");  // seat 1's own name
  const Transcript t = RunMatch(setup);
  CHECK(ValidateTranscript(t).ok());
  bool saw_fallback = false;
  for (const auto* n : All<PolicyNotice>(t)) {
    saw_fallback = saw_fallback || (n->seat == 1 && n->kind == "vote_fallback");
  }
  CHECK(saw_fallback);
}

TEST_CASE("observer hook sees every event once, with snapshots") {
  MatchSetup setup = CassetteSetup(std::make_shared<SyntheticBackend>());
  int seen = 0, snapshots = 0;
  setup.on_event = [&](const Event& e, const GameState&,
                       const EstimateMatrix* m) {
    CHECK(e.seq == seen);
    ++seen;
    if (m != nullptr) ++snapshots;
  };
  const Transcript t = RunMatch(setup);
  CHECK(seen == static_cast<int>(t.events.size()));
  CHECK(snapshots == static_cast<int>(t.estimations.size()));
}

TEST_CASE("validator catches hand-edited transcripts") {
  const Transcript golden = RunMatch(ScriptedSetup(FixedConfig()));
  REQUIRE(ValidateTranscript(golden).ok());

  SUBCASE("double elimination") {
    Transcript t = golden;
    auto it = std::find_if(t.events.begin(), t.events.end(), [](const Event& e) {
      return EventAs<Eliminated>(e) != nullptr;
    });
    REQUIRE(it != t.events.end());
    Event copy = *it;
    t.events.insert(it + 1, copy);
    for (std::size_t i = 0; i < t.events.size(); ++i) {
      t.events[i].seq = static_cast<int>(i);
    }
    const ValidationReport r = ValidateTranscript(t);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.Get(kCheckConservation).passed);
    CHECK_FALSE(r.Get(kCheckSingleElimination).passed);
    CHECK(r.Get(kCheckSequence).passed);
  }
  SUBCASE("dead speaker") {
    Transcript t = golden;
    for (Event& e : t.events) {
      if (e.round == 2 && std::holds_alternative<DebateUtterance>(e.body)) {
        std::get<DebateUtterance>(e.body).speaker = 0;  // killed night 1
        break;
      }
    }
    CHECK_FALSE(ValidateTranscript(t).Get(kCheckLiveness).passed);
  }
  SUBCASE("wrong winner") {
    Transcript t = golden;
    std::get<GameEnded>(t.events.back().body).winner = Side::kVillagers;
    CHECK_FALSE(ValidateTranscript(t).Get(kCheckWin).passed);
  }
  SUBCASE("missing end") {
    Transcript t = golden;
    t.events.pop_back();
    CHECK_FALSE(ValidateTranscript(t).Get(kCheckTermination).passed);
  }
  SUBCASE("vote during the night") {
    Transcript t = golden;
    for (Event& e : t.events) {
      if (std::holds_alternative<WerewolfKillChosen>(e.body)) {
        e.body = VoteCast{6, 0};
        break;
      }
    }
    CHECK_FALSE(ValidateTranscript(t).Get(kCheckPhase).passed);
  }
}

TEST_CASE("transcript parsing errors carry line numbers") {
  CHECK_THROWS_AS(ParseTranscript("", "empty"), TranscriptFormatError);
  const std::string good = SerializeTranscript(RunMatch(ScriptedSetup(FixedConfig())));
  const std::string broken = good.substr(0, good.find('\n') + 1) + "{oops\n";
  try {
    ParseTranscript(broken, "t.jsonl");
    FAIL("expected a parse error");
  } catch (const TranscriptFormatError& e) {
    CHECK(std::string(e.what()).find("t.jsonl:2:") != std::string::npos);
  }
  CHECK_THROWS_AS(ParseTranscript("{\"type\":\"event\"}\n", "x"),
                  TranscriptFormatError);
}

TEST_CASE("win rates are simple proportions") {
  std::vector<MatchResult> results(30);
  for (int i = 0; i < 30; ++i) {
    results[i].valid = true;
    results[i].winner = i < 18 ? Side::kWerewolves : Side::kVillagers;
  }
  WinRateReport r = Aggregate("x", PolicyKind::kImplicit, PolicyKind::kImplicit,
                              results);
  CHECK(r.werewolf_win_rate == doctest::Approx(0.6));
  CHECK(r.villager_win_rate == doctest::Approx(0.4));
  CHECK_FALSE(r.unreliable);
  results[0].valid = false;
  results[1].valid = false;
  results[2].valid = false;
  results[3].valid = false;
  r = Aggregate("x", PolicyKind::kImplicit, PolicyKind::kImplicit, results);
  CHECK(r.n == 26);
  CHECK(r.unreliable);
  CHECK(r.villager_win_rate + r.werewolf_win_rate + r.truncated_rate ==
        doctest::Approx(1.0));
}

TEST_CASE("tournament writes artifacts and keeps matches independent") {
  const fs::path dir = ScratchDir("tournament");
  TournamentConfig config;
  config.label = "scripted";
  config.n_matches = 6;
  config.base_seed = 100;
  config.jobs = 3;
  config.out_dir = dir / "six";
  const TournamentRun six = RunTournament(config);
  CHECK(six.report.n == 6);
  CHECK(six.report.villager_wins + six.report.werewolf_wins +
            six.report.truncated ==
        6);
  for (const char* f : {"report.json", "matches.csv", "manifest.json"}) {
    CHECK(fs::exists(config.out_dir / f));
  }
  const auto manifest = Json::parse(ReadFile(config.out_dir / "manifest.json"));
  CHECK(manifest["transcripts"].size() == 6);

  config.n_matches = 3;
  config.jobs = 1;
  config.out_dir = dir / "three";
  const TournamentRun three = RunTournament(config);
  for (int i = 0; i < 3; ++i) {
    CHECK(ReadFile(six.matches[i].transcript_path) ==
          ReadFile(three.matches[i].transcript_path));
  }
  CHECK(three.matches[2].game_id == "scripted-102");

  config.n_matches = 0;
  CHECK_THROWS_AS(RunTournament(config), ConfigError);
}

TEST_CASE("hard backend failures mark matches invalid") {
  TournamentConfig config;
  config.label = "broken";
  config.villager_policy = PolicyKind::kImplicit;
  config.n_matches = 4;
  config.backend = [](const std::string& id) -> std::shared_ptr<ChatBackend> {
    return std::make_shared<CannedBackend>([id](const ChatRequest& r) -> ChatResponse {
      throw CassetteMissError("miss for " + r.request_tag);
    });
  };
  const TournamentRun run = RunTournament(config);
  CHECK(run.report.invalid == 4);
  CHECK(run.report.n == 0);
  CHECK(run.report.unreliable);
  CHECK(run.matches[0].error.find("miss for broken-0/") != std::string::npos);
}

TEST_CASE("presets have the expected shape") {
  const auto matrix = MatrixPreset();
  CHECK(matrix.size() == 8);
  const auto ablation = AblationPreset();
  REQUIRE(ablation.size() == 8);
  CHECK(ablation[0].row == "Proposal");
  CHECK(ablation[0].villager_policy == PolicyKind::kAdaptive);
  CHECK(ablation[3].werewolf_policy == PolicyKind::kEstimationOnly);
  CHECK(ablation[5].villager_policy == PolicyKind::kImplicit);
  CHECK(ablation[5].werewolf_policy == PolicyKind::kAdaptiveWithoutEstimation);
  CHECK(ablation[6].row == "-Adaptation&Estimation");
  CHECK_FALSE(PresetByName("nope").has_value());

  const fs::path dir = ScratchDir("preset");
  TournamentConfig base;
  base.n_matches = 2;
  base.out_dir = dir;
  base.backend = [](const std::string&) {
    return std::make_shared<SyntheticBackend>();
  };
  const PresetReport report = RunPreset(ablation, base);
  CHECK(report.rows == std::vector<std::string>{"Proposal", "-Adaptation",
                                                "-Estimation",
                                                "-Adaptation&Estimation"});
  CHECK(report.columns == std::vector<std::string>{"Villagers", "Werewolves"});
  const std::string csv = ReadFile(dir / "preset.csv");
  CHECK(csv.rfind("setting,Villagers,Werewolves\nProposal,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("analyze") {
  const fs::path dir = ScratchDir("analyze");
  SUBCASE("empty directory is an error") {
    fs::create_directories(dir / "empty");
    CHECK_THROWS_AS(Analyze(dir / "empty", dir / "out"), AnalysisError);
  }
  SUBCASE("all-scripted runs give win rates only") {
    TournamentConfig config;
    config.label = "scripted";
    config.n_matches = 3;
    config.out_dir = dir / "runs";
    RunTournament(config);
    testing::WriteFile(dir / "runs" / "bad.transcript.jsonl", "{nope\n");
    const AnalysisResult r = Analyze(dir / "runs", dir / "out");
    CHECK(r.transcripts_read == 3);
    CHECK(r.skipped.size() == 1);
    REQUIRE(r.win_rates.size() == 1);
    CHECK(r.win_rates[0].n == 3);
    CHECK(r.est_rows == 0);
    for (const auto& b : r.delta_est.buckets) CHECK(b.sample_count == 0);
    CHECK(fs::exists(dir / "out" / "win_rates.csv"));
  }
  SUBCASE("adaptive runs fill the strategy buckets") {
    TournamentConfig config;
    config.label = "adaptive";
    config.werewolf_policy = PolicyKind::kAdaptive;
    config.villager_policy = PolicyKind::kImplicit;
    config.n_matches = 4;
    config.out_dir = dir / "runs";
    config.backend = [](const std::string&) {
      return std::make_shared<SyntheticBackend>();
    };
    RunTournament(config);
    const AnalysisResult r = Analyze(dir / "runs", dir / "out");
    CHECK(r.est_rows > 0);
    int adaptive_samples = 0;
    for (const auto& b : r.delta_est.buckets) {
      if (b.source == StrategySource::kAdaptation) {
        adaptive_samples += b.sample_count;
      } else {
        CHECK(b.sample_count == 0);
      }
    }
    CHECK(adaptive_samples > 0);
    const std::string csv = ReadFile(dir / "out" / "delta_est.csv");
    CHECK(csv.rfind("outcome,Adaptation-Support,Adaptation-Attack,Fix-Support,"
                    "Fix-Attack\nVillagers win,",
                    0) == 0);
    CHECK(csv.find("\nWerewolves win,") != std::string::npos);
    const std::string series = ReadFile(dir / "out" / "est_timeseries.csv");
    CHECK(series.rfind("game_id,round,moment,target_seat,target_role,est,n\n",
                       0) == 0);
  }
}

}  // namespace
}  // namespace werewolf
