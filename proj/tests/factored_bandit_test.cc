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

#include "friendfoe/factored_bandit.h"

#include <cmath>
#include <vector>

#include "friendfoe/error.h"
#include "friendfoe/game.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace friendfoe {
namespace {

std::vector<double> Probs(const Dist& d) {
  return {d.probs().begin(), d.probs().end()};
}

TEST(DiscretizeGaussianTest, BinCentersAndSymmetry) {
  DiscretizedGaussian g = DiscretizeGaussian(0.0, 1.5, -6.0, 6.0, 121);
  EXPECT_NEAR(g.centers.front(), -6.0 + 6.0 / 121.0, 1e-12);
  for (std::size_t i = 0; i < 121; ++i) {
    EXPECT_NEAR(g.probs[i], g.probs[120 - i], 1e-12);
  }
}

TEST(DiscretizeGaussianTest, MeanMatchesDirectSummation) {
  DiscretizedGaussian g = DiscretizeGaussian(0.2, 1.0, -6.0, 6.0, 121);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < 121; ++i) {
    const double c = -6.0 + (i + 0.5) * 12.0 / 121.0;
    const double w = std::exp(-0.5 * (c - 0.2) * (c - 0.2));
    num += w * c;
    den += w;
  }
  EXPECT_NEAR(g.Mean(), num / den, 1e-12);
  EXPECT_NEAR(g.Mean(), 0.2, 1e-3);
}

TEST(DiscretizeGaussianTest, MeanConvergesWithResolution) {
  double previous = INFINITY;
  for (int n : {11, 41, 161, 641}) {
    const double error =
        std::abs(DiscretizeGaussian(0.3, 1.0, -6.0, 6.0, n).Mean() - 0.3);
    EXPECT_LT(error, 12.0 / n);
    // Past n = 161 the error sits at the truncation floor of about 3e-8.
    EXPECT_LE(error, previous + 1e-7);
    previous = error;
  }
}

TEST(DiscretizeGaussianTest, Validation) {
  EXPECT_THROW(DiscretizeGaussian(0.0, 0.0, -1.0, 1.0, 10), Error);
  EXPECT_THROW(DiscretizeGaussian(0.0, 1.0, 1.0, -1.0, 10), Error);
  EXPECT_THROW(DiscretizeGaussian(0.0, 1.0, -1.0, 1.0, 2), Error);
}

TEST(TiltArmTest, ZeroWeightIsIdentity) {
  DiscretizedGaussian g = DiscretizeGaussian(0.1, 2.0, -6.0, 6.0, 121);
  EXPECT_EQ(Probs(TiltArm(g, 0.0)), Probs(g.probs));
}

TEST(TiltArmTest, SignOfWeightMovesMean) {
  DiscretizedGaussian g = DiscretizeGaussian(0.1, 2.0, -6.0, 6.0, 121);
  EXPECT_GT(MeanOver(TiltArm(g, 0.3), g.centers), g.Mean());
  EXPECT_LT(MeanOver(TiltArm(g, -0.3), g.centers), g.Mean());
}

TEST(TiltArmTest, SmallWeightShiftsMeanByVarianceTimesWeight) {
  for (double sigma : {1.0, 2.0}) {
    DiscretizedGaussian g = DiscretizeGaussian(0.0, sigma, -6.0, 6.0, 121);
    const double w = 1e-4;
    std::vector<double> prior = Probs(g.probs);
    auto tilted = oracle::Tilt(prior, g.centers, w);
    double mean = 0.0;
    for (std::size_t i = 0; i < tilted.size(); ++i) mean += tilted[i] * g.centers[i];
    const double shift = MeanOver(TiltArm(g, w), g.centers) - g.Mean();
    EXPECT_NEAR(shift, mean - g.Mean(), 1e-13);
    EXPECT_NEAR(shift / w, g.Variance(), 1e-3 * g.Variance());
  }
}

TEST(MakeGaussianBanditTest, ArmParameters) {
  FactoredBanditGame game = MakeGaussianBandit({}, 30.0, 0.0);
  ASSERT_EQ(game.num_arms(), 4u);
  const double means[] = {-0.2, -0.2 + 0.4 / 3, 0.2 - 0.4 / 3, 0.2};
  const double sigmas[] = {2.0, 2.0 - 1.0 / 3, 1.0 + 1.0 / 3, 1.0};
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(game.arms[i].mu, means[i], 1e-12);
    EXPECT_NEAR(game.arms[i].sigma, sigmas[i], 1e-12);
  }
  EXPECT_EQ(game.agent_prior.labels()[0], "arm1");
}

TEST(SolveBanditTest, IndifferentBanditIsSoftmaxOfPriorMeans) {
  FactoredBanditGame game = MakeGaussianBandit({}, 30.0, 0.0);
  BanditEquilibrium eq = SolveBandit(game);
  ASSERT_TRUE(eq.converged);
  std::vector<double> means;
  for (const auto& arm : game.arms) means.push_back(arm.Mean());
  auto expected = oracle::Tilt({0.25, 0.25, 0.25, 0.25}, means, 30.0);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(eq.agent[i], expected[i], 1e-8);
  EXPECT_EQ(eq.agent.ArgMax(), 3u);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(Probs(eq.arm_posteriors[i]), Probs(game.arms[i].probs));
  }
}

TEST(SolveBanditTest, IdenticalArmsKeepUniformAgent) {
  FactoredBanditGame game = MakeGaussianBandit({}, 30.0, -1.0);
  for (auto& arm : game.arms) arm = game.arms[0];
  BanditEquilibrium eq = SolveBandit(game);
  ASSERT_TRUE(eq.converged);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(eq.agent[i], 0.25, 1e-12);
    EXPECT_NEAR(eq.PosteriorMeans(game)[i], eq.PosteriorMeans(game)[0], 1e-12);
  }
}

TEST(SolveBanditTest, SingleArmGetsFullTilt) {
  GaussianBanditSetup setup;
  setup.num_arms = 1;
  FactoredBanditGame game = MakeGaussianBandit(setup, 5.0, -0.7);
  BanditEquilibrium eq = SolveBandit(game);
  ASSERT_TRUE(eq.converged);
  EXPECT_EQ(eq.agent[0], 1.0);
  Dist expected = TiltArm(game.arms[0], -0.7);
  for (std::size_t j = 0; j < expected.size(); ++j) {
    EXPECT_NEAR(eq.arm_posteriors[0][j], expected[j], 1e-10);
  }
}

TEST(SolveBanditTest, ConvergedRunsAreIndifferent) {
  for (double beta : {-2.0, 0.5, 2.0}) {
    BanditEquilibrium eq = SolveBandit(MakeGaussianBandit({}, 30.0, beta));
    ASSERT_TRUE(eq.converged);
    EXPECT_LT(eq.agent_spread, 1e-6);
    EXPECT_LT(eq.env_spread, 1e-6);
  }
}

TEST(SolveBanditTest, FriendlyArmStartsNeverLowerTheObjective) {
  for (double beta : {0.2, 1.0, 2.0}) {
    FactoredBanditGame game = MakeGaussianBandit({}, 30.0, beta);
    BanditEquilibrium from_prior =
        SolveBandit(game, {}, FriendlyStarts::kPriorOnly);
    BanditEquilibrium best = SolveBandit(game, {}, FriendlyStarts::kPriorAndArms);
    EXPECT_GE(BanditObjective(game, best),
              BanditObjective(game, from_prior) - 1e-12);
  }
}

TEST(SolveBanditTest, FriendlyPriorStartStaysOnLargestMean) {
  FactoredBanditGame game = MakeGaussianBandit({}, 30.0, 2.0);
  BanditEquilibrium eq = SolveBandit(game, {}, FriendlyStarts::kPriorOnly);
  EXPECT_EQ(eq.agent.ArgMax(), 3u);
}

TEST(BanditObjectiveTest, MatchesHandAssembly) {
  FactoredBanditGame game = MakeGaussianBandit({}, 30.0, -1.0);
  BanditEquilibrium eq = SolveBandit(game);
  const auto means = eq.PosteriorMeans(game);
  double value = 0.0;
  for (int i = 0; i < 4; ++i) value += eq.agent[i] * means[i];
  value -= oracle::Kl(Probs(eq.agent), Probs(game.agent_prior)) / 30.0;
  for (int i = 0; i < 4; ++i) {
    value += oracle::Kl(Probs(eq.arm_posteriors[i]), Probs(game.arms[i].probs));
  }
  EXPECT_NEAR(BanditObjective(game, eq), value, 1e-12);
}

TEST(BetaSweepTest, RepeatedBetasGiveIdenticalRows) {
  FactoredBanditGame base = MakeGaussianBandit({}, 30.0, 0.0);
  std::vector<double> betas = {0.0, 0.0, 0.0};
  auto rows = BetaSweep(base, betas);
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    ASSERT_TRUE(row.equilibrium.has_value());
    EXPECT_EQ(Probs(row.equilibrium->agent), Probs(rows[0].equilibrium->agent));
  }
}

TEST(BetaSweepTest, EntropyShrinksTowardIndifference) {
  FactoredBanditGame base = MakeGaussianBandit({}, 30.0, 0.0);
  std::vector<double> betas;
  for (int i = -30; i <= 0; ++i) betas.push_back(i / 10.0);
  auto rows = BetaSweep(base, betas);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LE(rows[i].equilibrium->agent.Entropy(),
              rows[i - 1].equilibrium->agent.Entropy() + 1e-9)
        << "beta " << rows[i].beta;
  }
}

TEST(BetaSweepTest, FailuresBecomeFlaggedRows) {
  FactoredBanditGame base = MakeGaussianBandit({}, 30.0, 0.0);
  std::vector<double> betas = {0.0, INFINITY};
  auto rows = BetaSweep(base, betas);
  EXPECT_TRUE(rows[0].equilibrium.has_value());
  EXPECT_FALSE(rows[1].equilibrium.has_value());
  EXPECT_FALSE(rows[1].error.empty());
}

TEST(FactorizationTest, PerArmTiltsMatchJointPosterior) {
  for (int n : {3, 5, 8}) {
    DiscretizedGaussian a = DiscretizeGaussian(-0.3, 1.2, -2.0, 2.0, n);
    DiscretizedGaussian b = DiscretizeGaussian(0.4, 0.7, -2.0, 2.0, n);
    const std::vector<double> agent = {0.35, 0.65};
    const double beta = -1.3;
    auto joint = oracle::JointPosterior(Probs(a.probs), Probs(b.probs),
                                        a.centers, agent, beta);
    Dist ta = TiltArm(a, beta * agent[0]);
    Dist tb = TiltArm(b, beta * agent[1]);
    double kl_joint = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        EXPECT_NEAR(ta[i] * tb[j], joint[i][j], 1e-12);
        kl_joint += joint[i][j] *
                    std::log(joint[i][j] / (a.probs[i] * b.probs[j]));
      }
    }
    EXPECT_NEAR(kl_joint,
                KlDivergence(ta, a.probs) + KlDivergence(tb, b.probs), 1e-10);
  }
}

TEST(BernoulliTest, ClosedFormRewards) {
  Dist q = Dist::WithIndexLabels({0.4, 0.6});
  auto rows = BernoulliBanditExperiment(q, kBernoulliBetas, 0, 1);
  ASSERT_EQ(rows.size(), 8u);
  const double expected_ii[] = {0.5000, 0.7237, 0.2763, 0.1258};
  for (int k = 0; k < 4; ++k) {
    const BernoulliRow& uniform = rows[2 * k];
    const BernoulliRow& split = rows[2 * k + 1];
    EXPECT_EQ(uniform.strategy, "I");
    EXPECT_EQ(split.strategy, "II");
    EXPECT_NEAR(uniform.exact_expected_reward, 0.5, 1e-12);
    const double beta = kBernoulliBetas[k];
    const double oracle_ii = 0.5 * (oracle::PureArmHitRate(0.4, beta, 0) +
                                    oracle::PureArmHitRate(0.4, beta, 1));
    EXPECT_NEAR(split.exact_expected_reward, oracle_ii, 1e-12);
    EXPECT_NEAR(split.exact_expected_reward, expected_ii[k], 1e-4);
    EXPECT_FALSE(split.simulated_mean.has_value());
  }
}

TEST(BernoulliTest, SimulationWithinThreeStandardDeviations) {
  Dist q = Dist::WithIndexLabels({0.4, 0.6});
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto rows = BernoulliBanditExperiment(q, kBernoulliBetas, 1000, seed);
    for (const auto& row : rows) {
      ASSERT_TRUE(row.simulated_mean.has_value());
      EXPECT_LE(std::abs(*row.simulated_mean - row.exact_expected_reward),
                3.0 * row.simulated_sd)
          << row.strategy << " beta=" << row.beta;
    }
  }
}

TEST(BernoulliTest, SeedDeterminesSimulation) {
  Dist q = Dist::WithIndexLabels({0.4, 0.6});
  auto a = BernoulliBanditExperiment(q, kBernoulliBetas, 1000, 9);
  auto b = BernoulliBanditExperiment(q, kBernoulliBetas, 1000, 9);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(*a[i].simulated_mean, *b[i].simulated_mean);
  }
}

}  // namespace
}  // namespace friendfoe
