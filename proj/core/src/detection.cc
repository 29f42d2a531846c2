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

#include "friendfoe/detection.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <tuple>

#include "friendfoe/best_response.h"
#include "friendfoe/error.h"
#include "friendfoe/format.h"
#include "friendfoe/game.h"

namespace friendfoe {

void InteractionLog::Validate(const Dist& q_env) const {
  for (const auto& r : records) {
    auto it = strategies.find(r.strategy_id);
    if (it == strategies.end()) {
      throw Error("record references unknown strategy '" + r.strategy_id +
                  "'");
    }
    if (r.x >= it->second.size() || !it->second.InSupport(r.x)) {
      throw Error("agent action " + std::to_string(r.x) +
                  " is outside the support of strategy '" + r.strategy_id +
                  "'");
    }
    if (r.z >= q_env.size() || !q_env.InSupport(r.z)) {
      throw Error("environment action " + std::to_string(r.z) +
                  " is outside the prior support");
    }
  }
}

double EnvLogLikelihood(std::span<const std::size_t> z_samples, double beta,
                        const Dist& q_env, const Dist& agent,
                        const Matrix& utility) {
  const Dist response = EnvBestResponse(utility, q_env, beta, agent);
  double total = 0.0;
  for (std::size_t z : z_samples) {
    if (z >= q_env.size() || !q_env.InSupport(z)) {
      throw Error("sample " + std::to_string(z) +
                  " is outside the environment's prior support");
    }
    if (response[z] == 0.0) {
      return -std::numeric_limits<double>::infinity();
    }
    total += std::log(response[z]);
  }
  return total;
}

BetaPosterior::BetaPosterior(std::vector<double> grid,
                             std::vector<double> log_weights)
    : grid_(std::move(grid)), log_weights_(std::move(log_weights)) {
  if (grid_.empty()) throw Error("empty beta grid");
  if (grid_.size() != log_weights_.size()) {
    throw Error("grid and weights differ in length");
  }
  for (std::size_t i = 1; i < grid_.size(); ++i) {
    if (!(grid_[i] > grid_[i - 1])) {
      throw Error("beta grid must be strictly increasing");
    }
  }
  // Validates that some weight is finite.
  LogWeights check(log_weights_);
}

std::vector<double> BetaPosterior::Weights() const {
  return LogWeights(log_weights_).Normalize();
}

double BetaPosterior::MapEstimate() const {
  const auto it = std::max_element(log_weights_.begin(), log_weights_.end());
  return grid_[static_cast<std::size_t>(it - log_weights_.begin())];
}

double BetaPosterior::Mean() const {
  const auto w = Weights();
  double mean = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) mean += w[i] * grid_[i];
  return mean;
}

BetaPosterior ComputeBetaPosterior(const InteractionLog& log,
                                   std::span<const double> grid,
                                   std::span<const double> prior_weights,
                                   const Dist& q_env, const Matrix& utility) {
  if (grid.size() != prior_weights.size()) {
    throw Error("grid and prior weights differ in length");
  }
  log.Validate(q_env);
  // Per-strategy z counts; the likelihood depends on a record only through
  // its strategy and z.
  std::map<std::string, std::vector<std::size_t>> z_by_strategy;
  for (const auto& r : log.records) z_by_strategy[r.strategy_id].push_back(r.z);

  std::vector<double> log_weights(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (prior_weights[g] < 0.0 || !std::isfinite(prior_weights[g])) {
      throw Error("prior weights must be finite and non-negative");
    }
    double lw = prior_weights[g] > 0.0
                    ? std::log(prior_weights[g])
                    : -std::numeric_limits<double>::infinity();
    for (const auto& [id, zs] : z_by_strategy) {
      if (!std::isfinite(lw)) break;
      lw += EnvLogLikelihood(zs, grid[g], q_env, log.strategies.at(id),
                             utility);
    }
    log_weights[g] = lw;
  }
  return BetaPosterior({grid.begin(), grid.end()}, std::move(log_weights));
}

std::vector<double> DefaultBetaGrid() { return Arange(-3.0, 3.0, 0.25); }

double SampleBeta(const BetaPosterior& posterior, std::uint64_t seed) {
  const auto weights = posterior.Weights();
  std::mt19937_64 rng(seed);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  return posterior.grid()[pick(rng)];
}

ThompsonDraw ThompsonStep(const BetaPosterior& posterior, const Dist& q_env,
                          const Dist& q_agent, const Matrix& utility,
                          double alpha, std::uint64_t seed,
                          const SolveConfig& config) {
  const double beta = SampleBeta(posterior, seed);
  const Game game(utility, q_agent, q_env, alpha, beta);
  auto result = Solve(game, config);
  return {beta, std::move(result.profile.agent), result.converged};
}

double ReactivityMi(const InteractionLog& log) {
  if (log.strategies.size() < 2) {
    throw InsufficientData(
        "reactivity test needs at least two distinct strategies");
  }
  using Key = std::tuple<std::string, std::size_t, std::size_t>;
  std::map<Key, double> n_sxz;
  std::map<std::pair<std::string, std::size_t>, double> n_sx;
  std::map<std::pair<std::size_t, std::size_t>, double> n_xz;
  std::map<std::size_t, double> n_x;
  for (const auto& r : log.records) {
    if (!log.strategies.contains(r.strategy_id)) {
      throw Error("record references unknown strategy '" + r.strategy_id +
                  "'");
    }
    n_sxz[{r.strategy_id, r.x, r.z}] += 1.0;
    n_sx[{r.strategy_id, r.x}] += 1.0;
    n_xz[{r.x, r.z}] += 1.0;
    n_x[r.x] += 1.0;
  }

  std::string missing;
  for (const auto& [id, pi] : log.strategies) {
    for (std::size_t x = 0; x < pi.size(); ++x) {
      if (pi.InSupport(x) && !n_sx.contains({id, x})) {
        missing += (missing.empty() ? "" : ", ") + id + "/x=" +
                   std::to_string(x);
      }
    }
  }
  if (!missing.empty()) {
    throw InsufficientData("no observations for cells: " + missing);
  }

  const double total = static_cast<double>(log.records.size());
  double mi = 0.0;
  for (const auto& [key, count] : n_sxz) {
    const auto& [id, x, z] = key;
    const double ratio =
        (count * n_x.at(x)) / (n_sx.at({id, x}) * n_xz.at({x, z}));
    mi += count / total * std::log(ratio);
  }
  return std::max(mi, 0.0);
}

InteractionLog SimulateInteractions(
    const std::map<std::string, Dist>& strategies, const Dist& q_env,
    const Matrix& utility, double beta, std::size_t per_strategy,
    std::uint64_t seed) {
  InteractionLog log;
  log.strategies = strategies;
  std::mt19937_64 rng(seed);
  for (const auto& [id, pi] : strategies) {
    const Dist response = EnvBestResponse(utility, q_env, beta, pi);
    std::discrete_distribution<std::size_t> draw_x(pi.probs().begin(),
                                                   pi.probs().end());
    std::discrete_distribution<std::size_t> draw_z(response.probs().begin(),
                                                   response.probs().end());
    for (std::size_t i = 0; i < per_strategy; ++i) {
      const std::size_t x = draw_x(rng);
      const std::size_t z = draw_z(rng);
      log.records.push_back({id, x, z});
    }
  }
  return log;
}

}  // namespace friendfoe
