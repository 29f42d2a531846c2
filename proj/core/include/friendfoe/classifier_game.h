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

#ifndef FRIENDFOE_CLASSIFIER_GAME_H_
#define FRIENDFOE_CLASSIFIER_GAME_H_

// A classifier-versus-labeler game on a 5x5 input grid. Both players choose
// a hard linear classifier (w, b) from the same 625-element parameter grid;
// the environment's choice induces the data labels, and the utility is the
// number of inputs on which the two classifiers agree.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "friendfoe/dist.h"
#include "friendfoe/equilibrium.h"
#include "friendfoe/game.h"
#include "friendfoe/matrix.h"

namespace friendfoe {

using Point2 = std::array<double, 2>;

struct LinearClassifier {
  Point2 w;
  Point2 b;
};

// sign(w . (point - b)) with sign(0) = +1. The bias is a point the decision
// boundary passes through.
int Classify(const LinearClassifier& theta, const Point2& point);

// The 25 inputs and 625 parameter pairs. Grid coordinates are
// {-1, -0.5, 0, 0.5, 1}; points are ordered with the first coordinate
// outermost, and theta index = w_index * 25 + b_index.
struct ParamGrid {
  std::vector<LinearClassifier> thetas;
  std::vector<Point2> points;

  static ParamGrid Uniform();
  std::vector<std::string> Labels() const;
  // Index of (w, b); throws Error if either is off the grid.
  std::size_t IndexOf(const Point2& w, const Point2& b) const;
};

inline constexpr std::size_t kGridSide = 5;
inline constexpr std::size_t kNumPoints = kGridSide * kGridSide;
inline constexpr std::size_t kNumThetas = kNumPoints * kNumPoints;

struct ClassifierGame {
  ParamGrid grid;
  // Agreement counts in {0, ..., 25}; symmetric with 25 on the diagonal.
  Matrix utility;
  Dist q_agent;  // uniform
  Dist q_env;    // proportional to utility(z, z_star)
  std::size_t z_star = 0;
  // Labelers that disagree with z_star everywhere get zero prior mass.
  std::size_t zero_prior_count = 0;

  Game ToGame(double alpha, double beta) const;
};

ClassifierGame BuildClassifierGame(const Point2& z_star_w,
                                   const Point2& z_star_b);

// Reference labeler used by the experiment.
inline constexpr Point2 kReferenceW = {-1.0, -0.5};
inline constexpr Point2 kReferenceB = {-0.5, 0.5};

// Probability of label +1 at each of the 25 inputs when theta ~ strategy.
struct LabelMap {
  std::vector<double> plus_probability;
};

LabelMap ComputeLabelMap(const Dist& strategy, const ParamGrid& grid);

struct StageSpec {
  std::string name;
  double alpha;
  double beta;
};

// 1: agent best response (alpha 30, beta 0); 2a, 2b: attacks on the frozen
// agent (beta -0.1, -1); 3: reactive agent vs. attack (alpha 10, beta -1);
// 4: reactive agent vs. friendly labeler (alpha 10, beta 1).
std::vector<StageSpec> DefaultStages();

struct StageResult {
  StageSpec spec;
  EquilibriumResult equilibrium;
  double expected_utility = 0.0;
  double agent_entropy = 0.0;
  double env_entropy = 0.0;
  LabelMap agent_map;
  LabelMap env_map;
};

// Runs the stages in order. The first stage starts from the game's priors;
// every later stage uses the first stage's posteriors as its priors.
// Expected utilities use the game's utility matrix throughout.
std::vector<StageResult> RunStages(const ClassifierGame& game,
                                   const SolveConfig& config,
                                   const std::vector<StageSpec>& stages =
                                       DefaultStages());

}  // namespace friendfoe

#endif  // FRIENDFOE_CLASSIFIER_GAME_H_
