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

#include "friendfoe/equilibrium.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <span>

#include "friendfoe/best_response.h"
#include "friendfoe/error.h"
#include "friendfoe/format.h"
#include "smoothed_player.h"

namespace friendfoe {
namespace {

constexpr double kSaddleTolerance = 1e-9;

StrategyProfile MakeProfile(const Game& game,
                            const internal::SmoothedPlayer& agent,
                            const internal::SmoothedPlayer& env) {
  // A pinned player returns its prior object untouched; rebuilding it would
  // renormalize and could move the last bit.
  auto build = [](const Dist& prior, const internal::SmoothedPlayer& player) {
    if (player.pinned()) return prior;
    return prior.WithProbs({player.probs().begin(), player.probs().end()});
  };
  return {build(game.prior_agent(), agent), build(game.prior_env(), env)};
}

// Mixes `dist` toward a Dirichlet(1) draw over the support of `prior`.
Dist RandomPerturbation(const Dist& dist, const Dist& prior, double step,
                        std::mt19937_64& rng) {
  std::exponential_distribution<double> unit_exp(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> direction(dist.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (prior[i] > 0.0) {
      direction[i] = unit_exp(rng);
      total += direction[i];
    }
  }
  const double s = step * (1.0 - unit(rng));  // in (0, step]
  std::vector<double> mixed(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) {
    mixed[i] = (1.0 - s) * dist[i] + s * direction[i] / total;
  }
  return dist.WithProbs(std::move(mixed));
}

}  // namespace

double Schedule::Rate(std::size_t t) const {
  switch (kind) {
    case Kind::kConstant:
      return eta0;
    case Kind::kRobbinsMonro:
      return eta0 / (1.0 + static_cast<double>(t) / tau);
  }
  return eta0;
}

void Schedule::Validate() const {
  if (!(eta0 > 0.0) || !std::isfinite(eta0)) {
    throw Error("learning rate eta0 must be positive");
  }
  if (kind == Kind::kConstant && eta0 > 1.0) {
    throw Error("constant learning rate must lie in (0, 1]");
  }
  if (kind == Kind::kRobbinsMonro && !(tau > 0.0)) {
    throw Error("Robbins-Monro tau must be positive");
  }
}

std::string ToString(Schedule::Kind kind) {
  return kind == Schedule::Kind::kConstant ? "constant" : "robbins_monro";
}

Schedule::Kind ParseScheduleKind(const std::string& name) {
  if (name == "constant") return Schedule::Kind::kConstant;
  if (name == "robbins_monro" || name == "robbins-monro") {
    return Schedule::Kind::kRobbinsMonro;
  }
  throw Error("unknown schedule '" + name + "'");
}

void SolveConfig::Validate() const {
  schedule.Validate();
  if (!(tol > 0.0)) throw Error("tol must be positive");
  if (max_iter == 0) throw Error("max_iter must be positive");
  if (trace_stride == 0) throw Error("trace_stride must be positive");
}

EquilibriumResult Solve(const Game& game, const SolveConfig& config) {
  config.Validate();
  const Matrix& utility = game.utility();
  internal::SmoothedPlayer agent(game.prior_agent(), game.alpha());
  internal::SmoothedPlayer env(game.prior_env(), game.beta());

  EquilibriumResult result{PriorProfile(game)};
  // Payoff vectors for the current strategies: U P(z) for the agent and
  // U^T P(x) for the environment.
  std::vector<double> env_payoff = utility.ApplyTransposed(agent.probs());
  std::size_t t = 0;
  for (;; ++t) {
    const std::vector<double> agent_payoff = utility.Apply(env.probs());
    result.final_residual = std::max(
        internal::TotalVariation(agent.probs(),
                                 agent.BestResponse(agent_payoff)),
        internal::TotalVariation(env.probs(), env.BestResponse(env_payoff)));
    const bool settled =
        result.final_residual < config.tol &&
        internal::NetSpread(agent, agent_payoff) < config.tol &&
        internal::NetSpread(env, env_payoff) < config.tol;
    const bool done = settled || t == config.max_iter;
    if (config.record_trace && (t % config.trace_stride == 0 || done)) {
      auto profile = MakeProfile(game, agent, env);
      auto net = NetPayoffs(profile, game);
      result.trace.push_back({t, std::move(profile), std::move(net)});
    }
    if (done) {
      result.converged = settled;
      break;
    }

    const double eta = config.schedule.Rate(t);
    switch (config.order) {
      case UpdateOrder::kAgentFirst:
        agent.Update(agent_payoff, eta);
        env_payoff = utility.ApplyTransposed(agent.probs());
        env.Update(env_payoff, eta);
        break;
      case UpdateOrder::kEnvFirst:
        env.Update(env_payoff, eta);
        agent.Update(utility.Apply(env.probs()), eta);
        env_payoff = utility.ApplyTransposed(agent.probs());
        break;
      case UpdateOrder::kSimultaneous:
        agent.Update(agent_payoff, eta);
        env.Update(env_payoff, eta);
        env_payoff = utility.ApplyTransposed(agent.probs());
        break;
    }
  }

  result.iterations = t;
  result.profile = MakeProfile(game, agent, env);
  if (game.alpha() != 0.0 && game.beta() != 0.0) {
    result.objective = Objective(result.profile, game);
  }
  result.net_report = NetPayoffs(result.profile, game);
  return result;
}

IndifferenceCheck VerifyIndifference(const Game& game,
                                     const StrategyProfile& profile,
                                     double tol) {
  IndifferenceCheck check{NetPayoffs(profile, game)};
  check.passed = check.net.agent_spread < tol && check.net.env_spread < tol;
  return check;
}

bool SaddleCheck(const Game& game, const StrategyProfile& profile,
                 int n_probes, double step, std::uint64_t seed) {
  if (!(game.beta() < 0.0)) {
    throw Error("saddle check requires an adversarial environment (beta < 0)");
  }
  if (!(game.alpha() > 0.0)) throw Error("saddle check requires alpha > 0");
  if (!(step > 0.0)) throw Error("probe step must be positive");
  const double base = Objective(profile, game);
  std::mt19937_64 rng(seed);
  for (int k = 0; k < n_probes; ++k) {
    StrategyProfile agent_probe{
        RandomPerturbation(profile.agent, game.prior_agent(), step, rng),
        profile.env};
    if (Objective(agent_probe, game) > base + kSaddleTolerance) return false;
    StrategyProfile env_probe{
        profile.agent,
        RandomPerturbation(profile.env, game.prior_env(), step, rng)};
    if (Objective(env_probe, game) < base - kSaddleTolerance) return false;
  }
  return true;
}

void WriteTraceCsv(std::ostream& out, const Game& game,
                   const std::vector<TracePoint>& trace) {
  const auto& agent_labels = game.prior_agent().labels();
  const auto& env_labels = game.prior_env().labels();
  out << "t";
  for (const auto& l : agent_labels) out << ",p_agent_" << l;
  for (const auto& l : env_labels) out << ",p_env_" << l;
  for (const auto& l : agent_labels) out << ",jx_" << l;
  for (const auto& l : env_labels) out << ",jz_" << l;
  out << "\n";
  for (const auto& point : trace) {
    out << point.t;
    for (double p : point.profile.agent.probs()) out << ',' << FormatNumber(p);
    for (double p : point.profile.env.probs()) out << ',' << FormatNumber(p);
    for (const auto& j : point.net.agent_net) out << ',' << FormatNumber(j);
    for (const auto& j : point.net.env_net) out << ',' << FormatNumber(j);
    out << "\n";
  }
}

}  // namespace friendfoe
