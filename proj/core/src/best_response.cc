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

#include <algorithm>
#include <cmath>
#include <limits>

#include "friendfoe/error.h"

namespace friendfoe {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
// log of the smallest positive normal double.
const double kLogMinNormal = std::log(std::numeric_limits<double>::min());

}  // namespace

LogWeights::LogWeights(std::vector<double> values)
    : values_(std::move(values)) {
  bool any_finite = false;
  for (double v : values_) {
    if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
      throw NumericalDivergence("log-weights contain NaN or +infinity");
    }
    any_finite = any_finite || std::isfinite(v);
  }
  if (!any_finite) throw Error("all log-weights are -infinity");
}

std::vector<double> LogWeights::Normalize() const {
  const double top = *std::max_element(values_.begin(), values_.end());
  double sum = 0.0;
  for (double v : values_) sum += std::exp(v - top);
  const double log_norm = top + std::log(sum);
  std::vector<double> probs(values_.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double log_p = values_[i] - log_norm;
    if (log_p >= kLogMinNormal) {
      probs[i] = std::exp(log_p);
      total += probs[i];
    }
  }
  for (double& p : probs) p /= total;
  return probs;
}

std::vector<double> LogProbs(const Dist& dist) {
  std::vector<double> out(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    out[i] = dist[i] > 0.0 ? std::log(dist[i]) : kNegInf;
  }
  return out;
}

Dist GibbsTilt(const Dist& prior, std::span<const double> payoff,
               double inverse_temperature) {
  if (payoff.size() != prior.size()) {
    throw Error("payoff vector does not match the prior");
  }
  if (inverse_temperature == 0.0) return prior;
  auto log_weights = LogProbs(prior);
  for (std::size_t i = 0; i < log_weights.size(); ++i) {
    if (prior[i] > 0.0) log_weights[i] += inverse_temperature * payoff[i];
  }
  return prior.WithProbs(LogWeights(std::move(log_weights)).Normalize());
}

Dist AgentBestResponse(const Game& game, const Dist& env) {
  if (env.size() != game.num_env_actions()) {
    throw Error("environment strategy does not match the game");
  }
  if (game.alpha() == 0.0) return game.prior_agent();
  return GibbsTilt(game.prior_agent(), game.utility().Apply(env.probs()),
                   game.alpha());
}

Dist EnvBestResponse(const Matrix& utility, const Dist& prior_env,
                     double beta, const Dist& agent) {
  if (agent.size() != utility.rows() || prior_env.size() != utility.cols()) {
    throw Error("agent strategy does not match the game");
  }
  if (beta == 0.0) return prior_env;
  return GibbsTilt(prior_env, utility.ApplyTransposed(agent.probs()), beta);
}

Dist EnvBestResponse(const Game& game, const Dist& agent) {
  return EnvBestResponse(game.utility(), game.prior_env(), game.beta(), agent);
}

StrategyProfile CombinedBestResponse(const Game& game,
                                     const StrategyProfile& profile) {
  return {AgentBestResponse(game, profile.env),
          EnvBestResponse(game, profile.agent)};
}

double Residual(const Game& game, const StrategyProfile& profile) {
  const auto response = CombinedBestResponse(game, profile);
  return std::max(TotalVariation(profile.agent, response.agent),
                  TotalVariation(profile.env, response.env));
}

}  // namespace friendfoe
