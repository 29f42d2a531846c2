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

#include "friendfoe/dist.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string_view>
#include <unordered_set>

#include "friendfoe/error.h"

namespace friendfoe {

Dist::Dist(std::vector<std::string> labels, std::vector<double> probs)
    : labels_(std::make_shared<const std::vector<std::string>>(
          std::move(labels))),
      probs_(std::move(probs)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& label : *labels_) {
    if (!seen.insert(label).second) {
      throw Error("duplicate action label '" + label + "'");
    }
  }
  Validate();
}

Dist::Dist(LabelSet labels, std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
  if (labels_ == nullptr) throw Error("null label set");
  Validate();
}

void Dist::Validate() {
  if (labels_->size() != probs_.size()) {
    throw Error("label count " + std::to_string(labels_->size()) +
                " does not match probability count " +
                std::to_string(probs_.size()));
  }
  if (probs_.empty()) throw Error("empty distribution");
  double sum = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw Error("probabilities must be finite and non-negative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kNormalizationSlack) {
    throw Error("probabilities sum to " + std::to_string(sum) +
                ", not 1");
  }
  if (sum != 1.0) {
    for (double& p : probs_) p /= sum;
  }
}

Dist Dist::WithIndexLabels(std::vector<double> probs) {
  auto labels = IndexLabels(probs.size());
  return Dist(std::move(labels), std::move(probs));
}

Dist Dist::Uniform(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error("empty distribution");
  return Dist(std::move(labels), std::vector<double>(n, 1.0 / n));
}

Dist Dist::Uniform(std::size_t n) { return Uniform(IndexLabels(n)); }

Dist Dist::PointMass(std::size_t n, std::size_t index) {
  if (index >= n) throw Error("point mass index out of range");
  std::vector<double> probs(n, 0.0);
  probs[index] = 1.0;
  return WithIndexLabels(std::move(probs));
}

Dist Dist::WithProbs(std::vector<double> probs) const {
  return Dist(labels_, std::move(probs));
}

std::size_t Dist::SupportSize() const {
  return std::count_if(probs_.begin(), probs_.end(),
                       [](double p) { return p > 0.0; });
}

double Dist::Entropy() const {
  double h = 0.0;
  for (double p : probs_) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

std::size_t Dist::ArgMax() const {
  return static_cast<std::size_t>(
      std::max_element(probs_.begin(), probs_.end()) - probs_.begin());
}

bool Dist::SameLabels(const Dist& other) const {
  return labels_ == other.labels_ || *labels_ == *other.labels_;
}

double TotalVariation(const Dist& a, const Dist& b) {
  if (!a.SameLabels(b)) throw Error("label mismatch");
  double l1 = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) l1 += std::abs(a[i] - b[i]);
  return 0.5 * l1;
}

std::vector<std::string> IndexLabels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

}  // namespace friendfoe
