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
 * @file swapping.hpp
 * Closed-form entanglement swapping predictors.
 *
 * Each predictor returns a renormalized OutcomeDistribution whose labels use
 * the measurement basis of the matching *_scenario() layout, so that it can
 * be compared outcome by outcome with the oracle. Zero-coefficient outcomes
 * are dropped. Modular arithmetic on d-level labels is always mod d.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qmask/scenario.hpp"

namespace qmask {

enum class Predictor {
  bell_bell,
  cat_swap,
  cat_bell_karimipour,
  cat_bell_clear,
  masked_ghz,
  masked_qudit,
  li_masked,
};

const char* to_string(Predictor predictor);
Predictor parse_predictor(const std::string& text);

/**
 * Two Bell states (|0 a_r> + (-1)^lambda_r |1 a_r-bar>), particles 1 and 3
 * measured in the Bell basis. Coefficients come from the four-branch table
 * selected by (a_1, a_2), each branch combining the brackets
 * [1 +- (-1)^{lambda_1+lambda_2}] and [(-1)^lambda_2 +- (-1)^lambda_1].
 */
OutcomeDistribution predict_bell_bell(const BellLabel& first, const BellLabel& second);

/**
 * n cat states, the first k[r] particles of cat r measured in the K-particle
 * GHZ basis. Same-sign (p, q) pairs carry (-1)^X + (-1)^{sum lambda - X},
 * mixed-sign pairs the difference, with X = sum_{r>=2} (1 - a_r^1) lambda_r.
 * Requires n >= 2 and at least one unmeasured particle.
 */
OutcomeDistribution predict_cat_swap(const std::vector<CatLabel>& cats, const std::vector<int>& k);

/// Double sum over (l1, l2) with coefficient zeta^{l1 l2} / d. Requires 2 <= k <= m.
OutcomeDistribution predict_cat_bell_karimipour(const MaxEntLabel& cat, const MaxEntLabel& pair, int k);

/// Indexed directly by the measured label (v1, v2), coefficient zeta^{(u_k - v2)(w_1 - v1)} / d.
OutcomeDistribution predict_cat_bell_clear(const MaxEntLabel& cat, const MaxEntLabel& pair, int k);

/// n masked qubit pairs, first particles measured in the n-particle GHZ basis.
OutcomeDistribution predict_masked_ghz_swap(const std::vector<int>& lambdas);

/// n masked d-level pairs, first particles measured in the maximally entangled basis.
OutcomeDistribution predict_masked_qudit_swap(const std::vector<PhaseAmplitudeInput>& inputs);

/// n Li-masked states (2d particles each), first particles measured in the maximally entangled basis.
OutcomeDistribution predict_li_masked_swap(const std::vector<QuditAmplitudes>& inputs);

/// Checks the scenario fits the predictor's layout, then runs it.
OutcomeDistribution predict(const SwapScenario& scenario, Predictor predictor);

/// Explicit measured-part and remainder states in ascending particle order.
std::pair<PureState, PureState> to_state(const PredictedOutcome& outcome, const SwapScenario& scenario);

}  // namespace qmask
