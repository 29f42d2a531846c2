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

#include "friendfoe/game.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "friendfoe/error.h"

namespace friendfoe {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Spread (max - min) over the finite entries.
double FiniteSpread(const std::vector<std::optional<double>>& values) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& v : values) {
    if (!v.has_value() || !std::isfinite(*v)) continue;
    lo = std::min(lo, *v);
    hi = std::max(hi, *v);
  }
  return hi >= lo ? hi - lo : 0.0;
}

std::vector<std::optional<double>> NetPayoffSide(
    const Dist& posterior, const Dist& prior, double inverse_temperature,
    const std::vector<double>& expected) {
  std::vector<std::optional<double>> net(posterior.size());
  for (std::size_t i = 0; i < posterior.size(); ++i) {
    if (prior[i] == 0.0) {
      if (posterior[i] > 0.0) throw Error("infinite divergence");
      continue;
    }
    if (posterior[i] == 0.0) {
      net[i] = kNegInf;
      continue;
    }
    net[i] = inverse_temperature * expected[i] -
             (std::log(posterior[i]) - std::log(prior[i]));
  }
  return net;
}

}  // namespace

Game::Game(Matrix utility, Dist prior_agent, Dist prior_env, double alpha,
           double beta)
    : utility_(std::move(utility)),
      prior_agent_(std::move(prior_agent)),
      prior_env_(std::move(prior_env)),
      alpha_(alpha),
      beta_(beta) {
  if (utility_.rows() != prior_agent_.size() ||
      utility_.cols() != prior_env_.size()) {
    throw Error("utility matrix is " + std::to_string(utility_.rows()) + "x" +
                std::to_string(utility_.cols()) + " but priors have sizes " +
                std::to_string(prior_agent_.size()) + " and " +
                std::to_string(prior_env_.size()));
  }
  for (double u : utility_.data()) {
    if (!std::isfinite(u)) throw Error("utility entries must be finite");
  }
  if (!std::isfinite(alpha_) || !std::isfinite(beta_)) {
    throw Error("inverse temperatures must be finite");
  }
  if (alpha_ < 0.0) throw Error("alpha must be non-negative");
}

Game Game::WithTemperatures(double alpha, double beta) const {
  return Game(utility_, prior_agent_, prior_env_, alpha, beta);
}

Game Game::WithPriors(Dist prior_agent, Dist prior_env) const {
  return Game(utility_, std::move(prior_agent), std::move(prior_env), alpha_,
              beta_);
}

StrategyProfile PriorProfile(const Game& game) {
  return {game.prior_agent(), game.prior_env()};
}

void CheckProfile(const StrategyProfile& profile, const Game& game) {
  if (profile.agent.size() != game.num_agent_actions() ||
      profile.env.size() != game.num_env_actions()) {
    throw Error("profile dimensions do not match the game");
  }
}

double KlDivergence(const Dist& p, const Dist& q) {
  if (!p.SameLabels(q)) throw Error("label mismatch");
  double kl = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (q[i] == 0.0) throw Error("infinite divergence");
    kl += p[i] * (std::log(p[i]) - std::log(q[i]));
  }
  // Rounding can leave a tiny negative value when p == q.
  return std::max(kl, 0.0);
}

double ExpectedUtility(const StrategyProfile& profile, const Game& game) {
  CheckProfile(profile, game);
  const auto row_values = game.utility().Apply(profile.env.probs());
  double total = 0.0;
  for (std::size_t x = 0; x < row_values.size(); ++x) {
    total += profile.agent[x] * row_values[x];
  }
  return total;
}

double Objective(const StrategyProfile& profile, const Game& game) {
  if (game.alpha() == 0.0 || game.beta() == 0.0) {
    throw Error(
        "objective undefined at zero temperature; use best-response/limit "
        "semantics");
  }
  return ExpectedUtility(profile, game) -
         KlDivergence(profile.agent, game.prior_agent()) / game.alpha() -
         KlDivergence(profile.env, game.prior_env()) / game.beta();
}

NetPayoffReport NetPayoffs(const StrategyProfile& profile, const Game& game) {
  CheckProfile(profile, game);
  const auto agent_expected = game.utility().Apply(profile.env.probs());
  const auto env_expected = game.utility().ApplyTransposed(profile.agent.probs());
  NetPayoffReport report;
  report.agent_net = NetPayoffSide(profile.agent, game.prior_agent(),
                                   game.alpha(), agent_expected);
  report.env_net =
      NetPayoffSide(profile.env, game.prior_env(), game.beta(), env_expected);
  report.agent_spread = FiniteSpread(report.agent_net);
  report.env_spread = FiniteSpread(report.env_net);
  return report;
}

}  // namespace friendfoe
