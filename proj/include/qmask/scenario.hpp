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
 * @file scenario.hpp
 * Swap scenarios and outcome distributions shared by the closed-form
 * predictors and the brute-force oracle. Nothing here knows any coefficient
 * formula; it only describes layouts and materializes states.
 */
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qmask/masking.hpp"
#include "qmask/states.hpp"

namespace qmask {

/// Output of the two-level Modi masker for input |l>.
struct ModiQubitInput {
  int l = 0;
  friend bool operator==(const ModiQubitInput&, const ModiQubitInput&) = default;
};

/// Output of the d-level Modi masker.
struct ModiQuditInput {
  PhaseAmplitudeInput input;
  friend bool operator==(const ModiQuditInput&, const ModiQuditInput&) = default;
};

/// Output of the d-level Li masker (2d particles).
struct LiInput {
  QuditAmplitudes input;
  friend bool operator==(const LiInput&, const LiInput&) = default;
};

/// Computational basis product state.
struct ProductInput {
  std::vector<int> digits;
  friend bool operator==(const ProductInput&, const ProductInput&) = default;
};

using InputDescriptor =
    std::variant<BellLabel, CatLabel, MaxEntLabel, ModiQubitInput, ModiQuditInput, LiInput, ProductInput>;

int particle_count(const InputDescriptor& input);
/// Level the input lives in; 0 when it is level-agnostic (product states).
int input_level(const InputDescriptor& input);
PureState materialize(const InputDescriptor& input, int level);

enum class BasisKind { ghz, max_entangled, computational };

const char* to_string(BasisKind kind);
BasisKind parse_basis_kind(const std::string& text);

/**
 * Inputs are tensored in listed order; `measured` holds global positions in
 * that product. Basis members are laid over the measured particles in
 * `measured_order` (ascending when empty).
 */
struct SwapScenario {
  std::string name;
  int level = 2;
  std::vector<InputDescriptor> inputs;
  ParticleSet measured;
  std::vector<int> measured_order;
  BasisKind basis = BasisKind::ghz;

  int total_particles() const;
  /// Global position ranges [first, last] of each input.
  std::vector<std::pair<int, int>> input_ranges() const;
  std::vector<int> effective_measured_order() const;
  void validate() const;
  friend bool operator==(const SwapScenario&, const SwapScenario&) = default;
};

PureState materialize_inputs(const SwapScenario& scenario);

/// The scenario's measurement basis, each member rearranged into ascending measured order.
BasisSet measurement_basis(const SwapScenario& scenario);

struct PredictedOutcome {
  /// Label of the measured basis member.
  std::string label;
  /// Coefficient as the closed form states it, before renormalization.
  Complex coefficient{0.0, 0.0};
  /// Descriptive label of the collapsed remainder; empty when only the explicit state is known.
  std::string remainder_label;
  /// Remainder with its particles in `remainder_order` (global positions).
  PureState remainder;
  std::vector<int> remainder_order;
  double probability = 0.0;
};

struct OutcomeDistribution {
  std::string provenance;
  std::vector<PredictedOutcome> outcomes;
  /// sqrt(sum |coefficient|^2), the renormalization constant.
  double normalization = 1.0;

  const PredictedOutcome* find(const std::string& label) const;
  double total_probability() const;
};

/// Fills in probabilities from coefficients and drops outcomes below kZeroProbability.
void renormalize(OutcomeDistribution& distribution);

/// The remainder rearranged into ascending global particle order.
PureState remainder_in_ascending_order(const PredictedOutcome& outcome);

// Scenario layouts for each swap family.

/// Two Bell states on (1,2),(3,4); particles 1 and 3 measured in the Bell basis.
SwapScenario bell_bell_scenario(const BellLabel& first, const BellLabel& second);

/// Cat states in order; the first k[r] particles of cat r measured in the GHZ basis.
SwapScenario cat_swap_scenario(const std::vector<CatLabel>& cats, const std::vector<int>& k);

/**
 * A d-level m-particle state then a two-particle state. Measures cat particle
 * k together with the first particle of the pair; the basis member's first
 * particle is the pair's particle, its second the cat's.
 */
SwapScenario cat_bell_scenario(const MaxEntLabel& cat, const MaxEntLabel& pair, int k);

/// Modi qubit masker outputs; the first particle of each measured in the GHZ basis.
SwapScenario masked_ghz_scenario(const std::vector<int>& lambdas);

/// Modi qudit masker outputs; the first particle of each measured in the maximally entangled basis.
SwapScenario masked_qudit_scenario(const std::vector<PhaseAmplitudeInput>& inputs);

/// Li masker outputs; the first particle of each measured in the maximally entangled basis.
SwapScenario li_masked_scenario(const std::vector<QuditAmplitudes>& inputs);

}  // namespace qmask
