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

#ifndef FRIENDFOE_BEST_RESPONSE_H_
#define FRIENDFOE_BEST_RESPONSE_H_

#include <span>
#include <vector>

#include "friendfoe/dist.h"
#include "friendfoe/game.h"
#include "friendfoe/matrix.h"

namespace friendfoe {

// Unnormalized log-probabilities, one per action. Entries may be -infinity
// (actions outside the prior support) but not NaN or +infinity, and at least
// one entry must be finite.
class LogWeights {
 public:
  explicit LogWeights(std::vector<double> values);

  // log-space Gibbs normalization with max subtraction. Entries whose
  // normalized probability is below the smallest normal double are set to
  // exactly zero, so every reported probability carries full precision.
  std::vector<double> Normalize() const;

  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

// log(p) elementwise, -infinity for zero entries.
std::vector<double> LogProbs(const Dist& dist);

// P(i) proportional to prior(i) * exp(inverse_temperature * payoff[i]). A
// zero inverse temperature returns the prior unchanged.
Dist GibbsTilt(const Dist& prior, std::span<const double> payoff,
               double inverse_temperature);

// P(x) ~ Q(x) exp(alpha * sum_z P(z) U(x, z)).
Dist AgentBestResponse(const Game& game, const Dist& env);

// P(z) ~ Q(z) exp(beta * sum_x P(x) U(x, z)).
Dist EnvBestResponse(const Game& game, const Dist& agent);
Dist EnvBestResponse(const Matrix& utility, const Dist& prior_env,
                     double beta, const Dist& agent);

// Both responses computed from the input profile (simultaneous update).
StrategyProfile CombinedBestResponse(const Game& game,
                                     const StrategyProfile& profile);

// max(TV(agent, f_X[env]), TV(env, f_Z[agent])); zero exactly at
// equilibrium.
double Residual(const Game& game, const StrategyProfile& profile);

}  // namespace friendfoe

#endif  // FRIENDFOE_BEST_RESPONSE_H_
