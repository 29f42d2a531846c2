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

#ifndef FRIENDFOE_TESTS_PROPERTY_CHECKS_H_
#define FRIENDFOE_TESTS_PROPERTY_CHECKS_H_

// Randomized property checks over generated games. Each check runs a fixed
// number of seeded trials and reports how many violated the property, with
// the first violation described. Shared by the property test binary and the
// acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

namespace friendfoe::testing {

struct PropertyOutcome {
  std::string name;
  int trials = 0;
  int failures = 0;
  std::string first_failure;

  bool passed() const { return trials > 0 && failures == 0; }
};

PropertyOutcome CheckKlNonNegativity(std::uint64_t seed, int trials = 500);
PropertyOutcome CheckGibbsLimitAlphaZero(std::uint64_t seed, int trials = 200);
PropertyOutcome CheckGibbsLimitBetaZero(std::uint64_t seed, int trials = 200);
PropertyOutcome CheckUtilityShiftInvariance(std::uint64_t seed,
                                            int trials = 200);
PropertyOutcome CheckScaleIdentity(std::uint64_t seed, int trials = 40);
PropertyOutcome CheckPermutationEquivariance(std::uint64_t seed,
                                             int trials = 40);
PropertyOutcome CheckAgentConcavity(std::uint64_t seed, int trials = 300);
PropertyOutcome CheckEnvConvexity(std::uint64_t seed, int trials = 300);
PropertyOutcome CheckResponseMonotonicity(std::uint64_t seed,
                                          int trials = 200);
PropertyOutcome CheckStationarity(std::uint64_t seed, int trials = 200);
PropertyOutcome CheckEnvResponseGridOracle(std::uint64_t seed,
                                           int trials = 30);
PropertyOutcome CheckWeightedNetPayoffs(std::uint64_t seed, int trials = 200);
PropertyOutcome CheckConvergedIndifference(std::uint64_t seed,
                                           int trials = 40);

// The suites named by the acceptance criteria, Gibbs limits split by player.
std::vector<PropertyOutcome> CoreProperties(std::uint64_t seed);

}  // namespace friendfoe::testing

#endif  // FRIENDFOE_TESTS_PROPERTY_CHECKS_H_
