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

#ifndef FRIENDFOE_SRC_SMOOTHED_PLAYER_H_
#define FRIENDFOE_SRC_SMOOTHED_PLAYER_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "friendfoe/best_response.h"
#include "friendfoe/dist.h"
#include "friendfoe/error.h"

namespace friendfoe::internal {

// One player's side of the iteration: its prior, log-weights and current
// strategy.
class SmoothedPlayer {
 public:
  SmoothedPlayer(const Dist& prior, double inverse_temperature)
      : log_prior_(LogProbs(prior)),
        log_weights_(log_prior_),
        probs_(prior.probs().begin(), prior.probs().end()),
        prior_probs_(probs_),
        inverse_temperature_(inverse_temperature) {}

  bool pinned() const { return inverse_temperature_ == 0.0; }
  std::span<const double> probs() const { return probs_; }
  std::span<const double> prior_probs() const { return prior_probs_; }
  double inverse_temperature() const { return inverse_temperature_; }

  // Restarts the iteration from the given log-weights.
  void Seed(std::vector<double> log_weights) {
    if (pinned()) return;
    log_weights_ = std::move(log_weights);
    probs_ = LogWeights(log_weights_).Normalize();
  }

  // Gibbs response to the expected payoff vector.
  std::vector<double> BestResponse(std::span<const double> payoff) const {
    if (pinned()) return prior_probs_;
    return LogWeights(Target(payoff)).Normalize();
  }

  void Update(std::span<const double> payoff, double eta) {
    if (pinned()) return;
    const auto target = Target(payoff);
    for (std::size_t i = 0; i < log_weights_.size(); ++i) {
      if (!std::isfinite(log_prior_[i])) continue;
      log_weights_[i] = (1.0 - eta) * log_weights_[i] + eta * target[i];
      if (!std::isfinite(log_weights_[i])) {
        throw NumericalDivergence("numerical divergence; reduce eta0");
      }
    }
    probs_ = LogWeights(log_weights_).Normalize();
  }

 private:
  std::vector<double> Target(std::span<const double> payoff) const {
    std::vector<double> target = log_prior_;
    for (std::size_t i = 0; i < target.size(); ++i) {
      if (std::isfinite(target[i])) {
        target[i] += inverse_temperature_ * payoff[i];
        if (!std::isfinite(target[i])) {
          throw NumericalDivergence("numerical divergence; reduce eta0");
        }
      }
    }
    return target;
  }

  std::vector<double> log_prior_;
  std::vector<double> log_weights_;
  std::vector<double> probs_;
  std::vector<double> prior_probs_;
  double inverse_temperature_;
};

inline double TotalVariation(std::span<const double> a,
                             std::span<const double> b) {
  double l1 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) l1 += std::abs(a[i] - b[i]);
  return 0.5 * l1;
}

// Spread (max - min) over the support of the net payoffs
// temperature * payoff[i] - log(posterior[i] / prior[i]); the same
// arithmetic as NetPayoffs().
inline double NetSpread(std::span<const double> posterior,
                        std::span<const double> prior, double temperature,
                        std::span<const double> payoff) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < posterior.size(); ++i) {
    if (posterior[i] <= 0.0 || prior[i] <= 0.0) continue;
    const double j = temperature * payoff[i] -
                     (std::log(posterior[i]) - std::log(prior[i]));
    lo = std::min(lo, j);
    hi = std::max(hi, j);
  }
  return hi >= lo ? hi - lo : 0.0;
}

inline double NetSpread(const SmoothedPlayer& player,
                        std::span<const double> payoff) {
  return NetSpread(player.probs(), player.prior_probs(),
                   player.inverse_temperature(), payoff);
}

}  // namespace friendfoe::internal

#endif  // FRIENDFOE_SRC_SMOOTHED_PLAYER_H_
