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

#include <algorithm>
#include <cmath>
#include <random>

#include "friendfoe/best_response.h"
#include "friendfoe/error.h"
#include "friendfoe/game.h"
#include "friendfoe/matrix.h"
#include "smoothed_player.h"

namespace friendfoe {
namespace {

std::vector<std::string> BinLabels(std::span<const double> centers) {
  std::vector<std::string> labels;
  labels.reserve(centers.size());
  for (std::size_t i = 0; i < centers.size(); ++i) {
    labels.push_back("bin" + std::to_string(i));
  }
  return labels;
}

std::vector<std::string> ArmLabels(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back("arm" + std::to_string(i + 1));
  }
  return labels;
}

std::vector<double> Scaled(std::span<const double> values, double factor) {
  std::vector<double> out(values.begin(), values.end());
  for (double& v : out) v *= factor;
  return out;
}

double ExpectedReward(std::span<const double> probs,
                      std::span<const double> centers) {
  double mean = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) mean += probs[i] * centers[i];
  return mean;
}

}  // namespace

double DiscretizedGaussian::Mean() const { return MeanOver(probs, centers); }

double DiscretizedGaussian::Variance() const {
  const double mean = Mean();
  double var = 0.0;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    var += probs[i] * (centers[i] - mean) * (centers[i] - mean);
  }
  return var;
}

DiscretizedGaussian DiscretizeGaussian(double mu, double sigma, double lo,
                                       double hi, int n) {
  if (!(sigma > 0.0)) throw Error("sigma must be positive");
  if (!(lo < hi)) throw Error("support requires lo < hi");
  if (n < 3) throw Error("need at least 3 bins");
  if (!std::isfinite(mu)) throw Error("mu must be finite");
  std::vector<double> centers(n);
  std::vector<double> log_density(n);
  const double width = (hi - lo) / n;
  for (int i = 0; i < n; ++i) {
    centers[i] = lo + (i + 0.5) * width;
    const double d = (centers[i] - mu) / sigma;
    log_density[i] = -0.5 * d * d;
  }
  auto probs = LogWeights(std::move(log_density)).Normalize();
  Dist dist(BinLabels(centers), std::move(probs));
  return {mu, sigma, lo, hi, std::move(centers), std::move(dist)};
}

double MeanOver(const Dist& dist, std::span<const double> centers) {
  if (dist.size() != centers.size()) throw Error("bin count mismatch");
  return ExpectedReward(dist.probs(), centers);
}

Dist TiltArm(const DiscretizedGaussian& arm, double weight) {
  if (!std::isfinite(weight)) throw Error("tilt weight must be finite");
  return GibbsTilt(arm.probs, arm.centers, weight);
}

void FactoredBanditGame::Validate() const {
  if (arms.empty()) throw Error("bandit needs at least one arm");
  if (agent_prior.size() != arms.size()) {
    throw Error("agent prior must have one entry per arm");
  }
  for (const auto& arm : arms) {
    if (arm.centers != arms.front().centers) {
      throw Error("all arms must share one support grid");
    }
  }
  if (!(alpha >= 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw Error("invalid inverse temperatures");
  }
}

FactoredBanditGame MakeGaussianBandit(const GaussianBanditSetup& setup,
                                      double alpha, double beta) {
  if (setup.num_arms < 1) throw Error("bandit needs at least one arm");
  std::vector<DiscretizedGaussian> arms;
  const int k = setup.num_arms;
  for (int i = 0; i < k; ++i) {
    const double frac = k == 1 ? 1.0 : static_cast<double>(i) / (k - 1);
    const double mu = setup.mean_lo + frac * (setup.mean_hi - setup.mean_lo);
    const double sigma =
        setup.sigma_hi - frac * (setup.sigma_hi - setup.sigma_lo);
    arms.push_back(DiscretizeGaussian(mu, sigma, setup.support_lo,
                                      setup.support_hi, setup.bins));
  }
  return {std::move(arms), Dist::Uniform(ArmLabels(k)), alpha, beta};
}

std::vector<double> BanditEquilibrium::PosteriorMeans(
    const FactoredBanditGame& game) const {
  std::vector<double> means;
  for (std::size_t i = 0; i < arm_posteriors.size(); ++i) {
    means.push_back(MeanOver(arm_posteriors[i], game.arms[i].centers));
  }
  return means;
}

namespace {

// One run of the iteration. With `seed_arm` set, that arm's posterior starts
// at the tilt it would take against the pure strategy on it.
BanditEquilibrium RunIteration(const FactoredBanditGame& game,
                               const SolveConfig& config,
                               std::optional<std::size_t> seed_arm) {
  const std::size_t k = game.num_arms();
  const auto& centers = game.arms.front().centers;

  internal::SmoothedPlayer agent(game.agent_prior, game.alpha);
  std::vector<internal::SmoothedPlayer> arms;
  arms.reserve(k);
  for (const auto& arm : game.arms) arms.emplace_back(arm.probs, game.beta);
  if (seed_arm.has_value()) {
    std::vector<double> seeded = LogProbs(game.arms[*seed_arm].probs);
    for (std::size_t j = 0; j < seeded.size(); ++j) {
      seeded[j] += game.beta * centers[j];
    }
    arms[*seed_arm].Seed(std::move(seeded));
  }

  // Arm i's payoff vector is P(x = i) * r; the agent's is E_{P_i}[r].
  auto agent_payoff = [&] {
    std::vector<double> payoff(k);
    for (std::size_t i = 0; i < k; ++i) {
      payoff[i] = ExpectedReward(arms[i].probs(), centers);
    }
    return payoff;
  };

  double residual = 0.0;
  bool converged = false;
  std::size_t t = 0;
  for (;; ++t) {
    const auto payoff = agent_payoff();
    residual = internal::TotalVariation(agent.probs(),
                                        agent.BestResponse(payoff));
    for (std::size_t i = 0; i < k; ++i) {
      const auto arm_payoff = Scaled(centers, agent.probs()[i]);
      residual = std::max(
          residual, internal::TotalVariation(arms[i].probs(),
                                             arms[i].BestResponse(arm_payoff)));
    }
    bool settled = residual < config.tol &&
                   internal::NetSpread(agent, payoff) < config.tol;
    for (std::size_t i = 0; settled && i < k; ++i) {
      const auto arm_payoff = Scaled(centers, agent.probs()[i]);
      settled = internal::NetSpread(arms[i], arm_payoff) < config.tol;
    }
    if (settled || t == config.max_iter) {
      converged = settled;
      break;
    }

    const double eta = config.schedule.Rate(t);
    const std::vector<double> old_agent(agent.probs().begin(),
                                        agent.probs().end());
    switch (config.order) {
      case UpdateOrder::kAgentFirst:
        agent.Update(payoff, eta);
        for (std::size_t i = 0; i < k; ++i) {
          arms[i].Update(Scaled(centers, agent.probs()[i]), eta);
        }
        break;
      case UpdateOrder::kEnvFirst:
        for (std::size_t i = 0; i < k; ++i) {
          arms[i].Update(Scaled(centers, old_agent[i]), eta);
        }
        agent.Update(agent_payoff(), eta);
        break;
      case UpdateOrder::kSimultaneous:
        agent.Update(payoff, eta);
        for (std::size_t i = 0; i < k; ++i) {
          arms[i].Update(Scaled(centers, old_agent[i]), eta);
        }
        break;
    }
  }

  BanditEquilibrium result{game.agent_prior.WithProbs(
      {agent.probs().begin(), agent.probs().end()})};
  for (std::size_t i = 0; i < k; ++i) {
    result.arm_posteriors.push_back(game.arms[i].probs.WithProbs(
        {arms[i].probs().begin(), arms[i].probs().end()}));
  }
  result.converged = converged;
  result.iterations = t;
  result.final_residual = residual;
  const auto payoff = agent_payoff();
  result.agent_spread = internal::NetSpread(agent, payoff);
  for (std::size_t i = 0; i < k; ++i) {
    result.env_spread = std::max(
        result.env_spread,
        internal::NetSpread(arms[i], Scaled(centers, agent.probs()[i])));
  }
  return result;
}

}  // namespace

double BanditObjective(const FactoredBanditGame& game,
                       const BanditEquilibrium& equilibrium) {
  if (game.alpha == 0.0 || game.beta == 0.0) {
    throw Error(
        "objective undefined at zero temperature; use best-response/limit "
        "semantics");
  }
  const auto means = equilibrium.PosteriorMeans(game);
  double value = ExpectedReward(equilibrium.agent.probs(), means) -
                 KlDivergence(equilibrium.agent, game.agent_prior) / game.alpha;
  for (std::size_t i = 0; i < game.num_arms(); ++i) {
    value -= KlDivergence(equilibrium.arm_posteriors[i], game.arms[i].probs) /
             game.beta;
  }
  return value;
}

BanditEquilibrium SolveBandit(const FactoredBanditGame& game,
                              const SolveConfig& config,
                              FriendlyStarts starts) {
  game.Validate();
  config.Validate();
  BanditEquilibrium best = RunIteration(game, config, std::nullopt);
  const bool friendly = game.alpha > 0.0 && game.beta > 0.0;
  if (!friendly || starts == FriendlyStarts::kPriorOnly) return best;

  std::optional<double> best_value;
  if (best.converged) best_value = BanditObjective(game, best);
  for (std::size_t i = 0; i < game.num_arms(); ++i) {
    BanditEquilibrium candidate = RunIteration(game, config, i);
    if (!candidate.converged) continue;
    const double value = BanditObjective(game, candidate);
    if (!best_value.has_value() || value > *best_value) {
      best = std::move(candidate);
      best_value = value;
    }
  }
  return best;
}

std::vector<SweepRow> BetaSweep(const FactoredBanditGame& base,
                                std::span<const double> betas,
                                const SolveConfig& config,
                                FriendlyStarts starts) {
  std::vector<SweepRow> rows;
  rows.reserve(betas.size());
  for (double beta : betas) {
    SweepRow row{beta};
    try {
      FactoredBanditGame game = base;
      game.beta = beta;
      row.equilibrium = SolveBandit(game, config, starts);
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<BernoulliRow> BernoulliBanditExperiment(
    const Dist& q_env, std::span<const double> betas, std::size_t n_rounds,
    std::uint64_t seed) {
  if (q_env.size() != 2) throw Error("Bernoulli bandit has two placements");
  const Matrix utility = Matrix::Identity(2);
  const Dist uniform = Dist::Uniform(2);
  const Dist first = Dist::PointMass(2, 0);
  const Dist second = Dist::PointMass(2, 1);
  const Dist prior = Dist::WithIndexLabels({q_env[0], q_env[1]});

  std::vector<BernoulliRow> rows;
  std::uint64_t row_index = 0;
  for (double beta : betas) {
    const Dist env_uniform = EnvBestResponse(utility, prior, beta, uniform);
    const Dist env_first = EnvBestResponse(utility, prior, beta, first);
    const Dist env_second = EnvBestResponse(utility, prior, beta, second);

    // Probability that the reward sits under the pulled arm.
    const double hit_uniform = 0.5 * env_uniform[0] + 0.5 * env_uniform[1];
    const double hit_first = env_first[0];
    const double hit_second = env_second[1];

    BernoulliRow uniform_row{beta, "I", hit_uniform};
    BernoulliRow split_row{beta, "II", 0.5 * (hit_first + hit_second)};
    for (BernoulliRow* row : {&uniform_row, &split_row}) {
      row->n_rounds = n_rounds;
      row->seed = seed;
    }
    if (n_rounds > 0) {
      const double n = static_cast<double>(n_rounds);
      {
        std::seed_seq seq{seed, row_index++};
        std::mt19937_64 rng(seq);
        std::bernoulli_distribution coin(0.5);
        std::bernoulli_distribution reward_first(env_uniform[0]);
        std::size_t hits = 0;
        for (std::size_t r = 0; r < n_rounds; ++r) {
          const bool pulls_first = coin(rng);
          const bool reward_under_first = reward_first(rng);
          hits += pulls_first == reward_under_first ? 1 : 0;
        }
        uniform_row.simulated_mean = hits / n;
        uniform_row.simulated_sd =
            std::sqrt(hit_uniform * (1.0 - hit_uniform) / n);
      }
      {
        std::seed_seq seq{seed, row_index++};
        std::mt19937_64 rng(seq);
        const std::size_t first_rounds = n_rounds / 2;
        std::bernoulli_distribution hit1(hit_first);
        std::bernoulli_distribution hit2(hit_second);
        std::size_t hits = 0;
        for (std::size_t r = 0; r < n_rounds; ++r) {
          hits += (r < first_rounds ? hit1(rng) : hit2(rng)) ? 1 : 0;
        }
        split_row.simulated_mean = hits / n;
        const double second_rounds = n - static_cast<double>(first_rounds);
        split_row.simulated_sd =
            std::sqrt(first_rounds * hit_first * (1.0 - hit_first) +
                      second_rounds * hit_second * (1.0 - hit_second)) /
            n;
      }
    }
    rows.push_back(std::move(uniform_row));
    rows.push_back(std::move(split_row));
  }
  return rows;
}

}  // namespace friendfoe
