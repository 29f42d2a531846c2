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

#ifndef FRIENDFOE_DIST_H_
#define FRIENDFOE_DIST_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace friendfoe {

// Sums within this distance of one are renormalized; anything further off is
// rejected.
inline constexpr double kNormalizationSlack = 1e-9;

using LabelSet = std::shared_ptr<const std::vector<std::string>>;

// A probability vector over a finite, labeled action set.
//
// Labels are shared between copies and between distributions derived through
// WithProbs(), so building many distributions over the same action set
// (e.g. 625 classifiers) does not copy the label strings.
class Dist {
 public:
  // Throws Error on negative or non-finite entries, duplicate labels, a
  // length mismatch, or a sum further than kNormalizationSlack from one.
  Dist(std::vector<std::string> labels, std::vector<double> probs);
  Dist(LabelSet labels, std::vector<double> probs);

  // Labels "0", "1", ...
  static Dist WithIndexLabels(std::vector<double> probs);
  static Dist Uniform(std::vector<std::string> labels);
  static Dist Uniform(std::size_t n);
  static Dist PointMass(std::size_t n, std::size_t index);

  // Same labels, new probabilities.
  Dist WithProbs(std::vector<double> probs) const;

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }
  const std::vector<std::string>& labels() const { return *labels_; }
  const LabelSet& label_set() const { return labels_; }

  bool InSupport(std::size_t i) const { return probs_[i] > 0.0; }
  std::size_t SupportSize() const;
  // Shannon entropy in nats.
  double Entropy() const;
  std::size_t ArgMax() const;

  bool SameLabels(const Dist& other) const;

 private:
  void Validate();

  LabelSet labels_;
  std::vector<double> probs_;
};

// Half the L1 distance. Labels must agree.
double TotalVariation(const Dist& a, const Dist& b);

std::vector<std::string> IndexLabels(std::size_t n);

}  // namespace friendfoe

#endif  // FRIENDFOE_DIST_H_
