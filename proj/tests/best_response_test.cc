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

#include "friendfoe/best_response.h"

#include <cmath>
#include <random>
#include <vector>

#include "friendfoe/error.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace friendfoe {
namespace {

Game IdentityGame(std::vector<double> qx, std::vector<double> qz, double alpha,
                  double beta) {
  return Game(Matrix::Identity(2), Dist::WithIndexLabels(std::move(qx)),
              Dist::WithIndexLabels(std::move(qz)), alpha, beta);
}

std::vector<double> Probs(const Dist& d) {
  return {d.probs().begin(), d.probs().end()};
}

TEST(LogWeightsTest, HugeExponentsStayFinite) {
  auto p = LogWeights({750.0, 700.0, 0.0}).Normalize();
  EXPECT_NEAR(p[0], 1.0, 1e-15);
  EXPECT_NEAR(p[1], std::exp(-50.0), 1e-30);
  EXPECT_EQ(p[2], 0.0);
}

TEST(LogWeightsTest, RejectsNanAndAllMinusInfinity) {
  EXPECT_THROW(LogWeights({NAN, 0.0}), NumericalDivergence);
  EXPECT_THROW(LogWeights({-INFINITY, -INFINITY}).Normalize(), Error);
}

TEST(AgentBestResponseTest, ZeroAlphaReturnsPriorExactly) {
  Game game = IdentityGame({0.3, 0.7}, {0.5, 0.5}, 0.0, 1.0);
  Dist br = AgentBestResponse(game, Dist::PointMass(2, 0));
  EXPECT_EQ(Probs(br), Probs(game.prior_agent()));
}

TEST(AgentBestResponseTest, SymmetricEnvironmentGivesUniform) {
  for (double alpha : {0.5, 3.0, 40.0}) {
    Game game = IdentityGame({0.5, 0.5}, {0.5, 0.5}, alpha, 1.0);
    Dist br = AgentBestResponse(game, Dist::Uniform(2));
    EXPECT_NEAR(br[0], 0.5, 1e-15);
  }
}

TEST(AgentBestResponseTest, HandValue) {
  Game game = IdentityGame({0.5, 0.5}, {0.5, 0.5}, 1.0, 1.0);
  Dist br = AgentBestResponse(game, Dist::PointMass(2, 0));
  EXPECT_NEAR(br[0], std::exp(1.0) / (std::exp(1.0) + 1.0), 1e-15);
  EXPECT_NEAR(br[0], 0.731059, 1e-6);
  EXPECT_NEAR(br[1], 0.268941, 1e-6);
}

TEST(EnvBestResponseTest, ZeroBetaReturnsPriorExactly) {
  Game game = IdentityGame({0.5, 0.5}, {0.4, 0.6}, 1.0, 0.0);
  EXPECT_EQ(Probs(EnvBestResponse(game, Dist::PointMass(2, 0))),
            Probs(game.prior_env()));
}

TEST(EnvBestResponseTest, FriendlyPureArmHandValue) {
  Game game = IdentityGame({0.5, 0.5}, {0.4, 0.6}, 1.0, 1.0);
  Dist br = EnvBestResponse(game, Dist::PointMass(2, 0));
  const double e = std::exp(1.0);
  EXPECT_NEAR(br[0], 0.4 * e / (0.4 * e + 0.6), 1e-15);
  EXPECT_NEAR(br[1], 0.6 / (0.4 * e + 0.6), 1e-15);
  EXPECT_NEAR(br[0], 0.644405, 1e-6);
}

TEST(EnvBestResponseTest, UniformAgentCancelsTilt) {
  for (double beta : {-2.0, -1.0, 1.0, 5.0}) {
    Game game = IdentityGame({0.5, 0.5}, {0.4, 0.6}, 1.0, beta);
    Dist br = EnvBestResponse(game, Dist::Uniform(2));
    EXPECT_NEAR(br[0], 0.4, 1e-15);
  }
}

TEST(EnvBestResponseTest, MatchesDirectExponentiation) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m{{u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}};
    const double beta = 4.0 * u(rng);
    Game game(m, Dist::Uniform(2), Dist::WithIndexLabels({0.2, 0.3, 0.5}),
              1.0, beta);
    Dist agent = Dist::WithIndexLabels({0.35, 0.65});
    std::vector<double> payoff(3);
    for (int z = 0; z < 3; ++z) payoff[z] = 0.35 * m(0, z) + 0.65 * m(1, z);
    auto expected = oracle::Tilt({0.2, 0.3, 0.5}, payoff, beta);
    Dist br = EnvBestResponse(game, agent);
    for (int z = 0; z < 3; ++z) EXPECT_NEAR(br[z], expected[z], 1e-14);
  }
}

TEST(EnvBestResponseTest, AdversarialMovesMassToLowPayoff) {
  Game game = IdentityGame({0.5, 0.5}, {0.5, 0.5}, 1.0, -3.0);
  Dist br = EnvBestResponse(game, Dist::PointMass(2, 0));
  EXPECT_LT(br[0], 0.5);
}

TEST(CombinedBestResponseTest, BothPinnedReturnsPriors) {
  Game game = IdentityGame({0.9, 0.1}, {0.1, 0.9}, 0.0, 0.0);
  StrategyProfile out = CombinedBestResponse(
      game, {Dist::PointMass(2, 1), Dist::PointMass(2, 0)});
  EXPECT_EQ(Probs(out.agent), Probs(game.prior_agent()));
  EXPECT_EQ(Probs(out.env), Probs(game.prior_env()));
}

TEST(CombinedBestResponseTest, IsSimultaneous) {
  Game game = IdentityGame({0.5, 0.5}, {0.5, 0.5}, 1.0, 1.0);
  StrategyProfile in{Dist::PointMass(2, 0), Dist::PointMass(2, 1)};
  StrategyProfile out = CombinedBestResponse(game, in);
  // Each side responds to the input of the other, not to the new iterate.
  EXPECT_NEAR(out.agent[1], std::exp(1.0) / (std::exp(1.0) + 1.0), 1e-15);
  EXPECT_NEAR(out.env[0], std::exp(1.0) / (std::exp(1.0) + 1.0), 1e-15);
}

TEST(CombinedBestResponseTest, GibbsKeepsFullSupport) {
  Game game = IdentityGame({0.9, 0.1}, {0.1, 0.9}, 10.0, 10.0);
  StrategyProfile out = CombinedBestResponse(
      game, {Dist::PointMass(2, 0), Dist::PointMass(2, 1)});
  EXPECT_EQ(out.agent.SupportSize(), 2u);
  EXPECT_EQ(out.env.SupportSize(), 2u);
}

TEST(ResidualTest, PinnedGame) {
  Game game = IdentityGame({0.9, 0.1}, {0.1, 0.9}, 0.0, 0.0);
  EXPECT_EQ(Residual(game, PriorProfile(game)), 0.0);
  EXPECT_NEAR(Residual(game, {Dist::WithIndexLabels({0.5, 0.5}),
                              Dist::WithIndexLabels({0.1, 0.9})}),
              0.4, 1e-15);
}

TEST(GibbsTiltTest, ZeroTemperatureIsIdentity) {
  Dist prior = Dist::WithIndexLabels({0.2, 0.8});
  EXPECT_EQ(Probs(GibbsTilt(prior, std::vector<double>{5.0, -5.0}, 0.0)),
            Probs(prior));
}

TEST(GibbsTiltTest, ZeroPriorStaysZero) {
  Dist prior = Dist::WithIndexLabels({0.0, 1.0});
  EXPECT_EQ(GibbsTilt(prior, std::vector<double>{100.0, 0.0}, 1.0)[0], 0.0);
}

}  // namespace
}  // namespace friendfoe
