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

#ifndef FRIENDFOE_FACTORED_BANDIT_H_
#define FRIENDFOE_FACTORED_BANDIT_H_

// Multi-armed bandits whose environment picks the joint reward vector
// z = (r_1, ..., r_K) from a product prior Q(z) = prod_i Q_i(r_i), with the
// agent's utility U(x, z) = r_x.
//
// The environment's Gibbs response exponent beta * sum_x P(x) r_x is additive
// over arms, so the joint response factorizes into one exponential tilt per
// arm, P_i(r) ~ Q_i(r) exp(beta P(x = i) r). This keeps the n^K joint outcome
// space out of every computation.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "friendfoe/dist.h"
#include "friendfoe/equilibrium.h"

namespace friendfoe {

// A Gaussian truncated to [lo, hi] and evaluated at n evenly spaced bin
// centers lo + (i + 0.5) (hi - lo) / n.
struct DiscretizedGaussian {
  double mu = 0.0;
  double sigma = 1.0;
  double lo = -6.0;
  double hi = 6.0;
  std::vector<double> centers;
  Dist probs;

  double Mean() const;
  double Variance() const;
};

DiscretizedGaussian DiscretizeGaussian(double mu, double sigma, double lo,
                                       double hi, int n);

// Mean of `dist` over the bin centers.
double MeanOver(const Dist& dist, std::span<const double> centers);

// P(r) ~ Q(r) exp(weight * r) over the arm's bins.
Dist TiltArm(const DiscretizedGaussian& arm, double weight);

struct FactoredBanditGame {
  std::vector<DiscretizedGaussian> arms;
  Dist agent_prior;
  double alpha = 0.0;
  double beta = 0.0;

  std::size_t num_arms() const { return arms.size(); }
  // Throws unless the arms share one support grid and the agent prior has one
  // entry per arm.
  void Validate() const;
};

// Grid and arm parameters for the four-armed Gaussian bandit: means evenly
// spaced on [-0.2, 0.2], standard deviations evenly spaced on [1, 2] in
// decreasing order, so the arm with the largest mean is the most precise.
struct GaussianBanditSetup {
  double mean_lo = -0.2;
  double mean_hi = 0.2;
  double sigma_lo = 1.0;
  double sigma_hi = 2.0;
  int num_arms = 4;
  double support_lo = -6.0;
  double support_hi = 6.0;
  int bins = 121;
};

FactoredBanditGame MakeGaussianBandit(const GaussianBanditSetup& setup,
                                      double alpha, double beta);

struct BanditEquilibrium {
  Dist agent;
  std::vector<Dist> arm_posteriors;
  bool converged = false;
  std::size_t iterations = 0;
  double final_residual = 0.0;
  // Net-payoff spreads over the support; the environment spread is the
  // largest within-arm spread.
  double agent_spread = 0.0;
  double env_spread = 0.0;

  std::vector<double> PosteriorMeans(
      const FactoredBanditGame& game) const;
};

// E[r_x] - KL(P_X || Q_X) / alpha - sum_i KL(P_i || Q_i) / beta. The KL of
// the factored joint posterior is the sum of the per-arm KLs. Throws when
// alpha or beta is zero.
double BanditObjective(const FactoredBanditGame& game,
                       const BanditEquilibrium& equilibrium);

// Where the iteration starts when both players are friendly (alpha > 0 and
// beta > 0). Both then maximize the same objective, which can have one local
// maximum per arm. kPriorOnly runs once from the priors. kPriorAndArms also
// runs once per arm with that arm's posterior started at its pure-strategy
// tilt Q_i(r) exp(beta r), and keeps the converged fixed point with the
// largest objective (the prior start wins ties). Other sign combinations
// have a unique equilibrium and always run once from the priors.
enum class FriendlyStarts { kPriorOnly, kPriorAndArms };

// Smoothed log-weight iteration on the factored game: the agent targets
// log Q(i) + alpha E_{P_i}[r], each arm targets log Q_i(r) + beta P(i) r.
// Same update order, schedule and stopping rule as Solve().
BanditEquilibrium SolveBandit(
    const FactoredBanditGame& game, const SolveConfig& config = {},
    FriendlyStarts starts = FriendlyStarts::kPriorAndArms);

struct SweepRow {
  double beta = 0.0;
  std::optional<BanditEquilibrium> equilibrium;
  // Set when the solve threw.
  std::string error;
};

// One independent SolveBandit() per beta, in input order.
std::vector<SweepRow> BetaSweep(
    const FactoredBanditGame& base, std::span<const double> betas,
    const SolveConfig& config = {},
    FriendlyStarts starts = FriendlyStarts::kPriorAndArms);

// Two-armed reward-placement bandit: U = I, the environment puts the single
// reward under one arm.
struct BernoulliRow {
  double beta = 0.0;
  // "I": uniform random arm. "II": each arm pulled deterministically for
  // half of the rounds.
  std::string strategy;
  double exact_expected_reward = 0.0;
  std::optional<double> simulated_mean;
  std::size_t n_rounds = 0;
  std::uint64_t seed = 0;
  // Standard deviation of the simulated mean under the exact model.
  double simulated_sd = 0.0;
};

// The environment best-responds to the agent's strategy with the agent
// frozen (alpha = 0). Strategy II is the equal mixture of the two
// pure-strategy games, the environment reacting to each pure strategy
// separately. n_rounds = 0 skips simulation.
std::vector<BernoulliRow> BernoulliBanditExperiment(
    const Dist& q_env, std::span<const double> betas, std::size_t n_rounds,
    std::uint64_t seed);

inline constexpr double kBernoulliPriorFirstArm = 0.4;
// Indifferent, friendly, adversarial, very adversarial.
inline constexpr double kBernoulliBetas[] = {0.0, 1.0, -1.0, -2.0};

}  // namespace friendfoe

#endif  // FRIENDFOE_FACTORED_BANDIT_H_
