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

#ifndef FRIENDFOE_GAME_H_
#define FRIENDFOE_GAME_H_

#include <optional>
#include <vector>

#include "friendfoe/dist.h"
#include "friendfoe/matrix.h"

namespace friendfoe {

// A one-shot game between an agent (rows) and an environment (columns).
//
// Each player starts from a prior strategy and may deviate from it at a KL
// cost scaled by the inverse of its temperature parameter. The sign of
// `beta` selects the environment's attitude: positive is friendly (it
// maximizes the agent's payoff), negative is adversarial, zero is
// indifferent. `alpha` must be non-negative.
class Game {
 public:
  Game(Matrix utility, Dist prior_agent, Dist prior_env, double alpha,
       double beta);

  const Matrix& utility() const { return utility_; }
  const Dist& prior_agent() const { return prior_agent_; }
  const Dist& prior_env() const { return prior_env_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  std::size_t num_agent_actions() const { return utility_.rows(); }
  std::size_t num_env_actions() const { return utility_.cols(); }

  Game WithTemperatures(double alpha, double beta) const;
  Game WithPriors(Dist prior_agent, Dist prior_env) const;

 private:
  Matrix utility_;
  Dist prior_agent_;
  Dist prior_env_;
  double alpha_;
  double beta_;
};

struct StrategyProfile {
  Dist agent;
  Dist env;
};

StrategyProfile PriorProfile(const Game& game);

// Per-action net payoffs
//   J_X(x) = alpha * sum_z P(z) U(x, z) - log(P(x) / Q(x))
//   J_Z(z) = beta  * sum_x P(x) U(x, z) - log(P(z) / Q(z)).
// Actions outside the prior support are std::nullopt. Actions in the prior
// support that the profile assigns zero mass hold -infinity; neither kind
// contributes to the spreads.
struct NetPayoffReport {
  std::vector<std::optional<double>> agent_net;
  std::vector<std::optional<double>> env_net;
  double agent_spread = 0.0;
  double env_spread = 0.0;
};

// KL(p || q) in nats, with 0 log 0 = 0. Throws Error("infinite divergence")
// when p puts mass outside the support of q.
double KlDivergence(const Dist& p, const Dist& q);

double ExpectedUtility(const StrategyProfile& profile, const Game& game);

// E[U] - KL(P(X)||Q(X)) / alpha - KL(P(Z)||Q(Z)) / beta. Undefined (throws)
// when either temperature is zero.
double Objective(const StrategyProfile& profile, const Game& game);

NetPayoffReport NetPayoffs(const StrategyProfile& profile, const Game& game);

// Throws unless the profile's action sets match the game's.
void CheckProfile(const StrategyProfile& profile, const Game& game);

}  // namespace friendfoe

#endif  // FRIENDFOE_GAME_H_
