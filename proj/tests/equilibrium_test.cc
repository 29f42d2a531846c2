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

#include "friendfoe/equilibrium.h"

#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "friendfoe/best_response.h"
#include "friendfoe/error.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace friendfoe {
namespace {

Game SkewedPriorGame(double alpha, double beta) {
  return Game(Matrix::Identity(2), Dist::WithIndexLabels({0.9, 0.1}),
              Dist::WithIndexLabels({0.1, 0.9}), alpha, beta);
}

SolveConfig WithEta(double eta) {
  SolveConfig config;
  config.schedule = Schedule::Constant(eta);
  return config;
}

TEST(ScheduleTest, Rates) {
  EXPECT_EQ(Schedule::Constant(0.3).Rate(1000), 0.3);
  Schedule rm = Schedule::RobbinsMonro(0.5, 1000.0);
  EXPECT_EQ(rm.Rate(0), 0.5);
  EXPECT_NEAR(rm.Rate(1000), 0.25, 1e-15);
}

TEST(ScheduleTest, Validation) {
  EXPECT_THROW(Schedule::Constant(1.5).Validate(), Error);
  EXPECT_THROW(Schedule::Constant(0.0).Validate(), Error);
  EXPECT_THROW(Schedule::RobbinsMonro(0.5, 0.0).Validate(), Error);
  EXPECT_EQ(ParseScheduleKind("robbins_monro"), Schedule::Kind::kRobbinsMonro);
  EXPECT_EQ(ParseScheduleKind("constant"), Schedule::Kind::kConstant);
  EXPECT_THROW(ParseScheduleKind("adam"), Error);
}

TEST(SolveTest, PinnedGameConvergesImmediatelyToPriors) {
  Game game = SkewedPriorGame(0.0, 0.0);
  EquilibriumResult r = Solve(game);
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.iterations, 1u);
  EXPECT_EQ(r.profile.agent[0], 0.9);
  EXPECT_EQ(r.profile.env[0], 0.1);
  EXPECT_FALSE(r.objective.has_value());
}

TEST(SolveTest, FriendlySkewedGameConvergesWithIndifference) {
  EquilibriumResult r = Solve(SkewedPriorGame(10.0, 10.0), WithEta(0.01));
  ASSERT_TRUE(r.converged);
  EXPECT_LT(r.final_residual, 1e-9);
  EXPECT_LT(r.net_report.agent_spread, 1e-6);
  EXPECT_LT(r.net_report.env_spread, 1e-6);
}

TEST(SolveTest, FriendlyIdentityMatchesBruteForce) {
  Game game(Matrix::Identity(2), Dist::Uniform(2), Dist::Uniform(2), 2.0, 2.0);
  EquilibriumResult r = Solve(game);
  ASSERT_TRUE(r.converged);
  auto grid = oracle::BruteForce2x2({{1, 0}, {0, 1}}, 0.5, 0.5, 2.0, 2.0);
  EXPECT_NEAR(*r.objective, grid.value, 2e-3);
  EXPECT_NEAR(r.profile.agent[0], grid.p, 2e-3);
  EXPECT_NEAR(r.profile.env[0], grid.q, 2e-3);
}

TEST(SolveTest, Deterministic) {
  Game game = SkewedPriorGame(10.0, -10.0);
  EquilibriumResult a = Solve(game);
  EquilibriumResult b = Solve(game);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.profile.agent[0], b.profile.agent[0]);
  EXPECT_EQ(a.profile.env[1], b.profile.env[1]);
}

TEST(SolveTest, NonConvergenceIsReportedNotThrown) {
  SolveConfig config = WithEta(0.1);
  config.max_iter = 5;
  EquilibriumResult r = Solve(SkewedPriorGame(20.0, -20.0), config);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 5u);
  EXPECT_GT(r.final_residual, config.tol);
}

TEST(SolveTest, OverflowingLogWeightsThrow) {
  Game game(Matrix{{1e10, 0.0}, {0.0, 1e10}}, Dist::Uniform(2),
            Dist::Uniform(2), 1e300, 1.0);
  try {
    Solve(game);
    FAIL() << "expected NumericalDivergence";
  } catch (const NumericalDivergence& e) {
    EXPECT_NE(std::string(e.what()).find("numerical divergence; reduce eta0"), std::string::npos);
  }
}

TEST(SolveTest, FixedPointIsStable) {
  Game game = SkewedPriorGame(10.0, -10.0);
  EquilibriumResult r = Solve(game);
  ASSERT_TRUE(r.converged);
  EXPECT_LT(Residual(game, r.profile), SolveConfig{}.tol);
}

TEST(SolveTest, RobbinsMonroAlsoConverges) {
  SolveConfig config;
  config.schedule = Schedule::RobbinsMonro(0.05);
  EquilibriumResult r = Solve(SkewedPriorGame(10.0, -10.0), config);
  EXPECT_TRUE(r.converged);
  EquilibriumResult reference = Solve(SkewedPriorGame(10.0, -10.0));
  EXPECT_NEAR(*r.objective, *reference.objective, 1e-7);
}

TEST(SolveTest, TraceIsStridedAndEndsAtFinalIterate) {
  SolveConfig config = WithEta(0.01);
  config.record_trace = true;
  config.trace_stride = 100;
  EquilibriumResult r = Solve(SkewedPriorGame(10.0, -10.0), config);
  ASSERT_GE(r.trace.size(), 2u);
  EXPECT_EQ(r.trace.front().t, 0u);
  for (std::size_t i = 1; i < r.trace.size(); ++i) {
    EXPECT_GT(r.trace[i].t, r.trace[i - 1].t);
  }
  EXPECT_EQ(r.trace.back().t, r.iterations);
  EXPECT_EQ(r.trace.back().profile.agent[0], r.profile.agent[0]);
}

TEST(SolveTest, FriendlyObjectiveIsNonDecreasingAlongTrace) {
  Game game = SkewedPriorGame(10.0, 10.0);
  SolveConfig config = WithEta(0.01);
  config.record_trace = true;
  EquilibriumResult r = Solve(game, config);
  ASSERT_TRUE(r.converged);
  // Skip the first few steps while the coupled iterates settle.
  const std::size_t transient = 10;
  for (std::size_t i = transient + 1; i < r.trace.size(); ++i) {
    EXPECT_GE(Objective(r.trace[i].profile, game),
              Objective(r.trace[i - 1].profile, game) - 1e-9)
        << "step " << r.trace[i].t;
  }
}

TEST(VerifyIndifferenceTest, ConvergedPassesAndPriorsFail) {
  Game game = SkewedPriorGame(10.0, 10.0);
  EquilibriumResult r = Solve(game);
  EXPECT_TRUE(VerifyIndifference(game, r.profile, 1e-6).passed);
  IndifferenceCheck at_priors =
      VerifyIndifference(game, PriorProfile(game), 1e-6);
  EXPECT_FALSE(at_priors.passed);
  EXPECT_GT(at_priors.net.agent_spread, 1.0);
}

TEST(VerifyIndifferenceTest, SingleActionGamePasses) {
  Game game(Matrix{{2.0}}, Dist::Uniform(1), Dist::Uniform(1), 1.0, 1.0);
  IndifferenceCheck c = VerifyIndifference(game, PriorProfile(game), 1e-12);
  EXPECT_TRUE(c.passed);
  EXPECT_EQ(c.net.agent_spread, 0.0);
}

TEST(SaddleCheckTest, EquilibriumPassesPriorsFail) {
  Game game = SkewedPriorGame(10.0, -10.0);
  EquilibriumResult r = Solve(game);
  ASSERT_TRUE(r.converged);
  EXPECT_TRUE(SaddleCheck(game, r.profile, 100, 0.05, 3));
  EXPECT_FALSE(SaddleCheck(game, PriorProfile(game), 100, 0.05, 3));
}

TEST(SaddleCheckTest, RequiresAdversarialEnvironment) {
  Game game = SkewedPriorGame(10.0, 10.0);
  EXPECT_THROW(SaddleCheck(game, PriorProfile(game), 10, 0.05, 1), Error);
}

TEST(SolveTest, UpdateOrdersAgreeOnSaddleValue) {
  Game game = SkewedPriorGame(20.0, -20.0);
  std::vector<double> values;
  for (UpdateOrder order : {UpdateOrder::kAgentFirst, UpdateOrder::kEnvFirst,
                            UpdateOrder::kSimultaneous}) {
    SolveConfig config;
    config.order = order;
    EquilibriumResult r = Solve(game, config);
    ASSERT_TRUE(r.converged);
    values.push_back(*r.objective);
  }
  EXPECT_NEAR(values[0], values[1], 1e-6);
  EXPECT_NEAR(values[0], values[2], 1e-6);
}

TEST(WriteTraceCsvTest, Header) {
  Game game(Matrix::Identity(2), Dist({"l", "r"}, {0.5, 0.5}),
            Dist({"a", "b"}, {0.5, 0.5}), 1.0, 1.0);
  SolveConfig config;
  config.record_trace = true;
  EquilibriumResult r = Solve(game, config);
  std::ostringstream out;
  WriteTraceCsv(out, game, r.trace);
  std::string header = out.str().substr(0, out.str().find('\n'));
  EXPECT_EQ(header, "t,p_agent_l,p_agent_r,p_env_a,p_env_b,jx_l,jx_r,jz_a,jz_b");
}

}  // namespace
}  // namespace friendfoe
