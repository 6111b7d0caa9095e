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
#include <cmath>
#include <random>

#include "doctest.h"
#include "werewolf/estimation/delta_est.h"
#include "werewolf/estimation/metrics.h"

namespace werewolf {
namespace {

RoleScores Row(int ww, int vil, int seer, int doc) {
  RoleScores row;
  row[Role::kWerewolf] = ww;
  row[Role::kVillager] = vil;
  row[Role::kSeer] = seer;
  row[Role::kDoctor] = doc;
  return row;
}

RoleScores RandomRow(std::mt19937& gen) {
  std::uniform_int_distribution<int> score(0, 4);
  RoleScores row;
  do {
    for (int& v : row.values) v = score(gen);
  } while (row.Sum() == 0);
  return row;
}

TEST_CASE("accuracy: full mass on the true role is exactly one") {
  CHECK(Accuracy(Row(4, 0, 0, 0), Role::kWerewolf) == 1.0);
}

TEST_CASE("accuracy: uniform row is exactly one quarter") {
  for (Role role : kAllRoles) {
    CHECK(Accuracy(Row(2, 2, 2, 2), role) == 0.25);
  }
}

TEST_CASE("accuracy: partial mass") {
  CHECK(Accuracy(Row(3, 1, 0, 0), Role::kVillager) == doctest::Approx(0.25));
  CHECK(Accuracy(Row(3, 1, 0, 0), Role::kWerewolf) == doctest::Approx(0.75));
  CHECK(Accuracy(Row(0, 1, 0, 0), Role::kSeer) == 0.0);
}

TEST_CASE("accuracy rejects invalid rows") {
  CHECK_THROWS_AS(Accuracy(Row(0, 0, 0, 0), Role::kSeer), InvalidEstimateError);
  CHECK_THROWS_AS(Accuracy(Row(5, 0, 0, 0), Role::kSeer), InvalidEstimateError);
  CHECK_THROWS_AS(Accuracy(Row(-1, 3, 0, 0), Role::kSeer),
                  InvalidEstimateError);
}

TEST_CASE("accuracy normalizes to one across candidate roles") {
  std::mt19937 gen(7);
  for (int i = 0; i < 500; ++i) {
    RoleScores row = RandomRow(gen);
    double total = 0.0;
    for (Role role : kAllRoles) total += Accuracy(row, role);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("accuracy preserves the ordering of raw scores") {
  std::mt19937 gen(11);
  for (int i = 0; i < 500; ++i) {
    RoleScores row = RandomRow(gen);
    for (Role a : kAllRoles) {
      for (Role b : kAllRoles) {
        CHECK((row[a] < row[b]) == (Accuracy(row, a) < Accuracy(row, b)));
      }
    }
  }
}

TEST_CASE("est averages observer accuracies") {
  std::vector<AccuracyRecord> accs{{0, 5, 0.5}, {1, 5, 0.25}, {2, 5, 0.75}};
  EstReport report = Est(5, accs);
  CHECK(report.est == doctest::Approx(0.5));
  CHECK(report.n == 3);
  CHECK(report.target == 5);

  std::vector<AccuracyRecord> single{{0, 3, 1.0}};
  CHECK(Est(3, single).est == 1.0);

  std::vector<AccuracyRecord> uniform;
  for (int i = 0; i < 6; ++i) {
    uniform.push_back({i, 7, Accuracy(RoleScores::Uniform(), Role::kWerewolf)});
  }
  CHECK(Est(7, uniform).est == 0.25);
}

TEST_CASE("est errors") {
  CHECK_THROWS_AS(Est(1, std::vector<AccuracyRecord>{}), UndefinedEstError);
  std::vector<AccuracyRecord> wrong{{0, 2, 0.5}};
  CHECK_THROWS_AS(Est(1, wrong), std::invalid_argument);
}

TEST_CASE("est is permutation invariant and bounded") {
  std::mt19937 gen(3);
  for (int i = 0; i < 200; ++i) {
    std::vector<AccuracyRecord> accs;
    const int n = 1 + static_cast<int>(gen() % 7);
    for (int k = 0; k < n; ++k) {
      accs.push_back({k, 9, Accuracy(RandomRow(gen), Role::kWerewolf)});
    }
    const double est = Est(9, accs).est;
    CHECK(est >= 0.0);
    CHECK(est <= 1.0);
    std::shuffle(accs.begin(), accs.end(), gen);
    CHECK(Est(9, accs).est == doctest::Approx(est).epsilon(1e-12));
  }
}

// Seats 0-5 villager side, 6-7 werewolves.
GameTrace BaseTrace() {
  GameTrace trace;
  trace.game_id = "t";
  trace.roles = {Role::kVillager, Role::kVillager, Role::kVillager,
                 Role::kVillager, Role::kSeer,     Role::kDoctor,
                 Role::kWerewolf, Role::kWerewolf};
  trace.fixed_strategy.resize(8);
  return trace;
}

EstimateMatrix MatrixFor(int observer, AdaptationMoment moment,
                         std::map<int, RoleScores> rows) {
  EstimateMatrix m;
  m.observer = observer;
  m.moment = moment;
  m.scores = std::move(rows);
  return m;
}

TEST_CASE("delta est: one werewolf interval under attack") {
  GameTrace trace = BaseTrace();
  trace.winner = Side::kWerewolves;
  const AdaptationMoment m0{MomentKind::kAfterNightAbilities, 1};
  const AdaptationMoment m1{MomentKind::kAfterDebate, 1};
  GameTrace::Moment first{m0, {0, 1, 2, 3, 6}, {}, {{6, Strategy::kAttack}}};
  GameTrace::Moment second{m1, {0, 1, 2, 3, 6}, {}, {}};
  // Est for seat 6: 0.30 at the first moment, 0.28 at the second.
  for (int obs : {0, 1, 2, 3}) {
    first.matrices.push_back(MatrixFor(obs, m0, {{6, Row(3, 3, 2, 2)}}));
  }
  first.matrices.push_back(MatrixFor(5, m0, {{6, Row(3, 3, 2, 2)}}));
  first.alive.push_back(5);
  second.alive.push_back(5);
  for (int obs : {0, 1, 2}) {
    second.matrices.push_back(MatrixFor(obs, m1, {{6, Row(3, 3, 2, 2)}}));
  }
  for (int obs : {3, 5}) {
    second.matrices.push_back(MatrixFor(obs, m1, {{6, Row(2, 2, 2, 2)}}));
  }
  trace.moments = {first, second};

  auto series = EstSeries(trace);
  REQUIRE(series.size() == 2);
  CHECK(series[0].est == doctest::Approx(0.30));
  CHECK(series[1].est == doctest::Approx(0.28));
  CHECK(series[0].n == 5);

  DeltaEstReport report = ComputeDeltaEst(std::span(&trace, 1));
  const auto& bucket =
      report.At(StrategySource::kAdaptation, Strategy::kAttack,
                Side::kWerewolves);
  CHECK(bucket.sample_count == 1);
  CHECK(bucket.mean_delta == doctest::Approx(-0.02));
}

TEST_CASE("delta est report always has the eight-bucket layout") {
  DeltaEstReport report = ComputeDeltaEst({});
  REQUIRE(report.buckets.size() == 8);
  const char* labels[] = {"Adaptation-Support", "Adaptation-Attack",
                          "Fix-Support", "Fix-Attack"};
  for (int i = 0; i < 8; ++i) {
    CHECK(report.buckets[i].ColumnLabel() == labels[i % 4]);
    CHECK(report.buckets[i].outcome ==
          (i < 4 ? Side::kVillagers : Side::kWerewolves));
    CHECK(report.buckets[i].sample_count == 0);
    CHECK(report.buckets[i].mean_delta == 0.0);
  }
}

TEST_CASE("delta est excludes short and truncated games") {
  GameTrace one = BaseTrace();
  one.winner = Side::kVillagers;
  one.moments.push_back({{MomentKind::kAfterDebate, 1}, {0, 6}, {}, {}});
  GameTrace truncated = BaseTrace();
  truncated.moments.resize(2);
  std::vector<GameTrace> traces{one, truncated};
  DeltaEstReport report = ComputeDeltaEst(traces);
  CHECK(report.excluded_few_snapshots == 1);
  CHECK(report.excluded_no_outcome == 1);
}

// Independent recomputation straight from the raw matrices.
struct OracleCell {
  double sum = 0;
  int n = 0;
};

double OracleEst(const GameTrace& t, const GameTrace::Moment& m, int j,
                 bool& defined) {
  double sum = 0;
  int n = 0;
  for (const auto& mat : m.matrices) {
    if (mat.fallback || mat.observer == j) continue;
    if (std::count(m.alive.begin(), m.alive.end(), mat.observer) == 0) continue;
    if (!mat.scores.count(j)) continue;
    const auto& row = mat.scores.at(j);
    double total = 0;
    for (int v : row.values) total += v;
    sum += row.values[static_cast<int>(t.roles[j])] / total;
    ++n;
  }
  defined = n > 0 && std::count(m.alive.begin(), m.alive.end(), j) > 0;
  return defined ? sum / n : 0.0;
}

TEST_CASE("delta est matches a brute-force recomputation") {
  std::mt19937 gen(2024);
  for (int round = 0; round < 40; ++round) {
    std::vector<GameTrace> traces;
    const int games = 1 + static_cast<int>(gen() % 4);
    for (int g = 0; g < games; ++g) {
      GameTrace t = BaseTrace();
      t.winner = gen() % 2 ? Side::kVillagers : Side::kWerewolves;
      if (gen() % 3 == 0) t.fixed_strategy[6] = Strategy::kSupport;
      if (gen() % 3 == 0) t.fixed_strategy[7] = Strategy::kAttack;
      std::vector<int> alive{0, 1, 2, 3, 4, 5, 6, 7};
      const int moments = 1 + static_cast<int>(gen() % 6);
      for (int k = 0; k < moments; ++k) {
        AdaptationMoment am{static_cast<MomentKind>(k % 3), k / 3 + 1};
        if (k > 0 && gen() % 3 == 0 && alive.size() > 3) {
          alive.erase(alive.begin() + gen() % alive.size());
        }
        GameTrace::Moment m{am, alive, {}, {}};
        for (int obs : alive) {
          if (gen() % 5 == 0) continue;
          EstimateMatrix mat;
          mat.observer = obs;
          mat.moment = am;
          mat.fallback = gen() % 7 == 0;
          for (int target : alive) {
            if (target != obs) mat.scores[target] = RandomRow(gen);
          }
          m.matrices.push_back(mat);
        }
        for (int w : {6, 7}) {
          if (gen() % 2) {
            m.selected[w] = gen() % 2 ? Strategy::kSupport : Strategy::kAttack;
          }
        }
        t.moments.push_back(m);
      }
      traces.push_back(t);
    }

    OracleCell cells[2][2][2];
    for (const auto& t : traces) {
      if (t.moments.size() < 2 || !t.winner) continue;
      const int o = *t.winner == Side::kVillagers ? 0 : 1;
      for (int w : {6, 7}) {
        for (std::size_t k = 1; k < t.moments.size(); ++k) {
          int src, strat;
          if (t.fixed_strategy[w]) {
            src = 1;
            strat = *t.fixed_strategy[w] == Strategy::kAttack;
          } else if (t.moments[k - 1].selected.count(w)) {
            src = 0;
            strat = t.moments[k - 1].selected.at(w) == Strategy::kAttack;
          } else {
            continue;
          }
          bool d0, d1;
          double e0 = OracleEst(t, t.moments[k - 1], w, d0);
          double e1 = OracleEst(t, t.moments[k], w, d1);
          if (!d0 || !d1) continue;
          cells[o][src][strat].sum += e1 - e0;
          ++cells[o][src][strat].n;
        }
      }
    }

    DeltaEstReport report = ComputeDeltaEst(traces);
    for (const auto& b : report.buckets) {
      const auto& cell = cells[b.outcome == Side::kVillagers ? 0 : 1]
                              [b.source == StrategySource::kFixed]
                              [b.strategy == Strategy::kAttack];
      CHECK(b.sample_count == cell.n);
      const double expected = cell.n ? cell.sum / cell.n : 0.0;
      CHECK(b.mean_delta == doctest::Approx(expected).epsilon(1e-9));
    }
  }
}

}  // namespace
}  // namespace werewolf
