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

#include "friendfoe/classifier_game.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>

#include "friendfoe/error.h"
#include "friendfoe/format.h"

namespace friendfoe {
namespace {

constexpr std::array<double, kGridSide> kCoords = {-1.0, -0.5, 0.0, 0.5, 1.0};

std::optional<std::size_t> CoordIndex(double v) {
  for (std::size_t i = 0; i < kGridSide; ++i) {
    if (kCoords[i] == v) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> PointIndex(const Point2& p) {
  auto i = CoordIndex(p[0]);
  auto j = CoordIndex(p[1]);
  if (!i || !j) return std::nullopt;
  return *i * kGridSide + *j;
}

// Label of every theta at every point, +1 -> true.
std::vector<std::vector<bool>> LabelTable(const ParamGrid& grid) {
  std::vector<std::vector<bool>> table(grid.thetas.size());
  for (std::size_t t = 0; t < grid.thetas.size(); ++t) {
    table[t].resize(grid.points.size());
    for (std::size_t p = 0; p < grid.points.size(); ++p) {
      table[t][p] = Classify(grid.thetas[t], grid.points[p]) > 0;
    }
  }
  return table;
}

}  // namespace

int Classify(const LinearClassifier& theta, const Point2& point) {
  const double u = theta.w[0] * (point[0] - theta.b[0]) +
                   theta.w[1] * (point[1] - theta.b[1]);
  return u >= 0.0 ? 1 : -1;
}

ParamGrid ParamGrid::Uniform() {
  ParamGrid grid;
  for (double a : kCoords) {
    for (double b : kCoords) grid.points.push_back({a, b});
  }
  for (const auto& w : grid.points) {
    for (const auto& b : grid.points) grid.thetas.push_back({w, b});
  }
  return grid;
}

std::vector<std::string> ParamGrid::Labels() const {
  std::vector<std::string> labels;
  labels.reserve(thetas.size());
  for (const auto& t : thetas) {
    labels.push_back("w(" + FormatNumber(t.w[0]) + ";" + FormatNumber(t.w[1]) +
                     ")b(" + FormatNumber(t.b[0]) + ";" +
                     FormatNumber(t.b[1]) + ")");
  }
  return labels;
}

std::size_t ParamGrid::IndexOf(const Point2& w, const Point2& b) const {
  auto wi = PointIndex(w);
  auto bi = PointIndex(b);
  if (!wi || !bi) throw Error("classifier parameters are not on the grid");
  return *wi * kNumPoints + *bi;
}

Game ClassifierGame::ToGame(double alpha, double beta) const {
  return Game(utility, q_agent, q_env, alpha, beta);
}

ClassifierGame BuildClassifierGame(const Point2& z_star_w,
                                   const Point2& z_star_b) {
  ParamGrid grid = ParamGrid::Uniform();
  const std::size_t z_star = grid.IndexOf(z_star_w, z_star_b);
  const auto labels = LabelTable(grid);
  const std::size_t n = grid.thetas.size();

  Matrix utility(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = x; z < n; ++z) {
      int agree = 0;
      for (std::size_t p = 0; p < grid.points.size(); ++p) {
        agree += labels[x][p] == labels[z][p] ? 1 : 0;
      }
      utility(x, z) = agree;
      utility(z, x) = agree;
    }
  }

  std::vector<double> env_weights(n);
  double total = 0.0;
  std::size_t zero_prior = 0;
  for (std::size_t z = 0; z < n; ++z) {
    env_weights[z] = utility(z, z_star);
    total += env_weights[z];
    if (env_weights[z] == 0.0) ++zero_prior;
  }
  for (double& w : env_weights) w /= total;

  auto label_set = std::make_shared<const std::vector<std::string>>(
      grid.Labels());
  Dist q_agent(label_set, std::vector<double>(n, 1.0 / n));
  Dist q_env(label_set, std::move(env_weights));
  return {std::move(grid), std::move(utility), std::move(q_agent),
          std::move(q_env), z_star, zero_prior};
}

LabelMap ComputeLabelMap(const Dist& strategy, const ParamGrid& grid) {
  if (strategy.size() != grid.thetas.size()) {
    throw Error("strategy does not match the parameter grid");
  }
  LabelMap map{std::vector<double>(grid.points.size(), 0.0)};
  for (std::size_t t = 0; t < grid.thetas.size(); ++t) {
    if (strategy[t] == 0.0) continue;
    for (std::size_t p = 0; p < grid.points.size(); ++p) {
      if (Classify(grid.thetas[t], grid.points[p]) > 0) {
        map.plus_probability[p] += strategy[t];
      }
    }
  }
  for (double& v : map.plus_probability) v = std::min(v, 1.0);
  return map;
}

std::vector<StageSpec> DefaultStages() {
  return {{"1", 30.0, 0.0},
          {"2a", 0.0, -0.1},
          {"2b", 0.0, -1.0},
          {"3", 10.0, -1.0},
          {"4", 10.0, 1.0}};
}

std::vector<StageResult> RunStages(const ClassifierGame& game,
                                   const SolveConfig& config,
                                   const std::vector<StageSpec>& stages) {
  std::vector<StageResult> results;
  std::optional<StrategyProfile> first_posterior;
  for (const auto& spec : stages) {
    Game stage_game = game.ToGame(spec.alpha, spec.beta);
    if (first_posterior.has_value()) {
      stage_game = stage_game.WithPriors(first_posterior->agent,
                                         first_posterior->env);
    }
    StageResult result{spec, Solve(stage_game, config)};
    const auto& profile = result.equilibrium.profile;
    result.expected_utility = ExpectedUtility(profile, stage_game);
    result.agent_entropy = profile.agent.Entropy();
    result.env_entropy = profile.env.Entropy();
    result.agent_map = ComputeLabelMap(profile.agent, game.grid);
    result.env_map = ComputeLabelMap(profile.env, game.grid);
    if (!first_posterior.has_value()) first_posterior = profile;
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace friendfoe
