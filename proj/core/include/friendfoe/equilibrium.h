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

#ifndef FRIENDFOE_EQUILIBRIUM_H_
#define FRIENDFOE_EQUILIBRIUM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "friendfoe/game.h"

namespace friendfoe {

// Learning-rate schedule for the smoothed log-weight iteration.
//
//   constant:       eta_t = eta0, 0 < eta0 <= 1
//   robbins_monro:  eta_t = eta0 / (1 + t / tau)
//
// The second family has a divergent sum and a convergent sum of squares.
struct Schedule {
  enum class Kind { kConstant, kRobbinsMonro };

  Kind kind = Kind::kConstant;
  double eta0 = 0.01;
  double tau = 1000.0;

  static Schedule Constant(double eta) { return {Kind::kConstant, eta, 1.0}; }
  static Schedule RobbinsMonro(double eta0, double tau = 1000.0) {
    return {Kind::kRobbinsMonro, eta0, tau};
  }

  double Rate(std::size_t t) const;
  void Validate() const;
};

std::string ToString(Schedule::Kind kind);
Schedule::Kind ParseScheduleKind(const std::string& name);

// Which player moves first within one iteration. kAgentFirst is the order of
// the reference iteration: the environment update sees the agent's new
// strategy. kSimultaneous updates both from the previous iterate.
enum class UpdateOrder { kAgentFirst, kEnvFirst, kSimultaneous };

struct SolveConfig {
  Schedule schedule;
  double tol = 1e-9;
  std::size_t max_iter = 1'000'000;
  bool record_trace = false;
  std::size_t trace_stride = 1;
  UpdateOrder order = UpdateOrder::kAgentFirst;

  void Validate() const;
};

struct TracePoint {
  std::size_t t;
  StrategyProfile profile;
  NetPayoffReport net;
};

struct EquilibriumResult {
  StrategyProfile profile;
  bool converged = false;
  // Number of log-weight updates performed.
  std::size_t iterations = 0;
  double final_residual = 0.0;
  // Absent when alpha or beta is zero.
  std::optional<double> objective;
  NetPayoffReport net_report;
  std::vector<TracePoint> trace;
};

// Runs the smoothed fixed-point iteration from the priors
//
//   L_{t+1}(x) = (1 - eta_t) L_t(x) + eta_t (log Q(x) + alpha sum_z P_t(z) U(x,z))
//   L_{t+1}(z) = (1 - eta_t) L_t(z) + eta_t (log Q(z) + beta sum_x P_{t+1}(x) U(x,z))
//
// with P = softmax(L). The run has converged once Residual() < tol and both
// net-payoff spreads are below tol on the same iterate; it stops there or
// after max_iter updates. A player with zero inverse temperature stays pinned
// to its prior. Running out of iterations is reported through `converged`;
// non-finite log-weights throw NumericalDivergence.
EquilibriumResult Solve(const Game& game, const SolveConfig& config = {});

struct IndifferenceCheck {
  NetPayoffReport net;
  bool passed = false;
};

// Passes when both net-payoff spreads over the support are below tol.
IndifferenceCheck VerifyIndifference(const Game& game,
                                     const StrategyProfile& profile,
                                     double tol);

// Probes random feasible perturbations of total-variation size at most
// `step`. Passes when no agent-only perturbation raises the objective and no
// environment-only perturbation lowers it, each by more than 1e-9. Requires
// beta < 0 < alpha.
bool SaddleCheck(const Game& game, const StrategyProfile& profile,
                 int n_probes, double step, std::uint64_t seed);

// Columns: t, p_agent_<label>..., p_env_<label>..., jx_<label>...,
// jz_<label>.... Excluded net payoffs print as -inf or empty.
void WriteTraceCsv(std::ostream& out, const Game& game,
                   const std::vector<TracePoint>& trace);

}  // namespace friendfoe

#endif  // FRIENDFOE_EQUILIBRIUM_H_
