// Copyright 2026 The Friendfoe Authors
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


#include <benchmark/benchmark.h>

#include "friendfoe/classifier_game.h"
#include "friendfoe/detection.h"
#include "friendfoe/equilibrium.h"
#include "friendfoe/factored_bandit.h"
#include "friendfoe/game.h"

namespace friendfoe {
namespace {

void BM_Solve2x2(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  Game game(Matrix::Identity(2), Dist::WithIndexLabels({0.9, 0.1}),
            Dist::WithIndexLabels({0.1, 0.9}), t, -t);
  for (auto _ : state) {
    EquilibriumResult r = Solve(game);
    benchmark::DoNotOptimize(r.objective);
    state.counters["iterations"] = static_cast<double>(r.iterations);
  }
}
BENCHMARK(BM_Solve2x2)->Arg(1)->Arg(10)->Arg(20);

void BM_BuildClassifierGame(benchmark::State& state) {
  for (auto _ : state) {
    ClassifierGame game = BuildClassifierGame(kReferenceW, kReferenceB);
    benchmark::DoNotOptimize(game.utility.data());
  }
}
BENCHMARK(BM_BuildClassifierGame)->Unit(benchmark::kMillisecond);

void BM_SolveClassifierStage(benchmark::State& state) {
  const ClassifierGame game = BuildClassifierGame(kReferenceW, kReferenceB);
  const Game stage = game.ToGame(10.0, -1.0);
  for (auto _ : state) {
    EquilibriumResult r = Solve(stage);
    benchmark::DoNotOptimize(r.objective);
  }
}
BENCHMARK(BM_SolveClassifierStage)->Unit(benchmark::kMillisecond);

void BM_SolveGaussianBandit(benchmark::State& state) {
  const double beta = static_cast<double>(state.range(0));
  const FactoredBanditGame game = MakeGaussianBandit({}, 30.0, beta);
  for (auto _ : state) {
    BanditEquilibrium eq = SolveBandit(game);
    benchmark::DoNotOptimize(eq.agent);
  }
}
BENCHMARK(BM_SolveGaussianBandit)->Arg(-2)->Arg(0)->Arg(2)
    ->Unit(benchmark::kMillisecond);

void BM_BetaPosterior(benchmark::State& state) {
  const Dist q = Dist::WithIndexLabels({0.4, 0.6});
  const InteractionLog log = SimulateInteractions(
      {{"arm1", Dist::PointMass(2, 0)}, {"arm2", Dist::PointMass(2, 1)}}, q,
      Matrix::Identity(2), -2.0, state.range(0), 1);
  const auto grid = DefaultBetaGrid();
  const std::vector<double> prior(grid.size(), 1.0 / grid.size());
  for (auto _ : state) {
    BetaPosterior post =
        ComputeBetaPosterior(log, grid, prior, q, Matrix::Identity(2));
    benchmark::DoNotOptimize(post.MapEstimate());
  }
}
BENCHMARK(BM_BetaPosterior)->Arg(1000)->Arg(10000);

}  // namespace
}  // namespace friendfoe

BENCHMARK_MAIN();
