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

#ifndef FRIENDFOE_DETECTION_H_
#define FRIENDFOE_DETECTION_H_

// Inferring an environment's attitude from repeated interactions.
//
// Each record is one round: the agent drew x from a private strategy pi and
// the environment answered with z. The environment is modeled as
// stationary: every round it plays the Gibbs response to pi with a fixed but
// unknown inverse temperature beta and a known prior Q(Z). Only beta is
// inferred.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "friendfoe/dist.h"
#include "friendfoe/equilibrium.h"
#include "friendfoe/matrix.h"

namespace friendfoe {

struct InteractionRecord {
  std::string strategy_id;
  std::size_t x = 0;
  std::size_t z = 0;
};

struct InteractionLog {
  std::vector<InteractionRecord> records;
  std::map<std::string, Dist> strategies;

  // Throws unless every record names a known strategy, every x lies in that
  // strategy's support and every z in the support of q_env.
  void Validate(const Dist& q_env) const;
};

// Sum of log P(z_i) where P(Z) is the environment's Gibbs response to
// `agent` at inverse temperature beta.
double EnvLogLikelihood(std::span<const std::size_t> z_samples, double beta,
                        const Dist& q_env, const Dist& agent,
                        const Matrix& utility);

class BetaPosterior {
 public:
  BetaPosterior(std::vector<double> grid, std::vector<double> log_weights);

  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& log_weights() const { return log_weights_; }
  // Normalized posterior weights.
  std::vector<double> Weights() const;
  double MapEstimate() const;
  double Mean() const;

 private:
  std::vector<double> grid_;
  std::vector<double> log_weights_;
};

// Grid posterior over beta: prior times the product of per-record
// likelihoods, each under that record's strategy. An empty log returns the
// prior.
BetaPosterior ComputeBetaPosterior(const InteractionLog& log,
                                   std::span<const double> grid,
                                   std::span<const double> prior_weights,
                                   const Dist& q_env, const Matrix& utility);

// [-3, 3] in steps of 0.25.
std::vector<double> DefaultBetaGrid();

// Draws beta from the posterior weights; deterministic given the seed.
double SampleBeta(const BetaPosterior& posterior, std::uint64_t seed);

struct ThompsonDraw {
  double beta;
  Dist agent;
  bool converged;
};

// Samples beta' from the posterior and returns the agent's equilibrium
// strategy in the game (q_agent, q_env, alpha, beta').
ThompsonDraw ThompsonStep(const BetaPosterior& posterior, const Dist& q_env,
                          const Dist& q_agent, const Matrix& utility,
                          double alpha, std::uint64_t seed,
                          const SolveConfig& config = {});

// Plug-in estimate, in nats, of I(pi; z | x) from the empirical joint counts
// of (strategy_id, x, z). A non-reactive environment's answer depends on pi
// only through x, so the quantity vanishes. Throws InsufficientData with
// fewer than two strategies or when a (strategy, x) cell implied by a
// strategy's support has no records.
double ReactivityMi(const InteractionLog& log);

// Draws rounds from the stationary model: for each strategy, `per_strategy`
// rounds with x ~ pi and z ~ Gibbs response to pi.
InteractionLog SimulateInteractions(const std::map<std::string, Dist>& strategies,
                                    const Dist& q_env, const Matrix& utility,
                                    double beta, std::size_t per_strategy,
                                    std::uint64_t seed);

}  // namespace friendfoe

#endif  // FRIENDFOE_DETECTION_H_
