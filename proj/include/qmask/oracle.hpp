// Copyright 2026 The qmask Authors
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

/**
 * @file oracle.hpp
 * Brute-force swap outcomes by exhaustive projection. This module must not
 * depend on swapping.hpp: it only tensors the inputs and projects onto every
 * member of the measurement basis.
 */
#pragma once

#include <string>
#include <vector>

#include "qmask/scenario.hpp"

namespace qmask {

struct OracleResult {
  OutcomeDistribution distribution;  // provenance "oracle"
  double total_probability = 0.0;
};

OracleResult simulate_swap(const SwapScenario& scenario);

struct OutcomeComparison {
  std::string label;
  double predicted_probability = 0.0;
  double reference_probability = 0.0;
  double deviation = 0.0;
  /// |<predicted remainder|reference remainder>|; 0 when the outcome is unmatched.
  double fidelity = 0.0;
  bool missing = false;  // in the reference only
  bool extra = false;    // in the prediction only

  friend bool operator==(const OutcomeComparison&, const OutcomeComparison&) = default;
};

struct ComparisonReport {
  std::vector<OutcomeComparison> rows;
  double max_deviation = 0.0;
  double min_fidelity = 1.0;
  int missing = 0;
  int extra = 0;
  double tolerance = kNormTolerance;
  bool verdict = false;
};

/// Matches outcomes by label and checks probability and remainder agreement.
ComparisonReport compare(const OutcomeDistribution& predicted, const OutcomeDistribution& reference,
                         double tol = kNormTolerance);
ComparisonReport compare(const OutcomeDistribution& predicted, const OracleResult& oracle,
                         double tol = kNormTolerance);

}  // namespace qmask
