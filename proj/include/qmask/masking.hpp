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
 * @file masking.hpp
 * Quantum information maskers as input -> output state maps, and a checker
 * for the masking condition: every chosen subsystem marginal must be the
 * same for every member of the masked family.
 *
 * The ancilla each masker consumes is not modelled.
 */
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qmask/qudit.hpp"

namespace qmask {

/// sum_l eta_l e^{i theta_l} |l>, with eta >= 0, sum eta^2 = 1, theta in [-pi, pi].
struct PhaseAmplitudeInput {
  std::vector<double> eta;
  std::vector<double> theta;

  int level() const { return static_cast<int>(eta.size()); }
  void validate() const;
  PureState ket() const;
  friend bool operator==(const PhaseAmplitudeInput&, const PhaseAmplitudeInput&) = default;
};

/// sum_k alpha_k |k>, sum |alpha_k|^2 = 1.
struct QuditAmplitudes {
  std::vector<Complex> alpha;

  int level() const { return static_cast<int>(alpha.size()); }
  void validate() const;
  PureState ket() const;
  friend bool operator==(const QuditAmplitudes&, const QuditAmplitudes&) = default;
};

/// (|00> + (-1)^l |11>) / sqrt 2.
PureState mask_modi_qubit(int l);

/// sum_l eta_l e^{i theta_l} |l, l>.
PureState mask_modi_qudit(const PhaseAmplitudeInput& input);

/// alpha_0 phi+ phi+ + alpha_1 phi- phi-, four qubits.
PureState mask_li_qubit(const QuditAmplitudes& input);

/// sum_k alpha_k (x)_{h=1..d} (1/sqrt d) sum_j zeta^{jk} |jj>, 2d particles.
PureState mask_li_qudit(const QuditAmplitudes& input);

struct SubsystemMarginals {
  ParticleSet subsystem;
  /// One marginal per family member, in family order.
  std::vector<DensityMatrix> marginals;
  /// Largest entrywise deviation of any marginal from the first.
  double max_deviation = 0.0;
};

struct MaskingReport {
  std::vector<SubsystemMarginals> subsystems;
  double max_deviation = 0.0;
  /// Largest deviation between the reference marginals of equal-sized
  /// subsystems (rho_A against rho_B). Informational; not part of the verdict.
  std::optional<double> cross_deviation;
  double tolerance = kNormTolerance;
  bool verdict = false;
};

MaskingReport verify_masking(std::span<const PureState> family, std::span<const ParticleSet> subsystems,
                             double tol = kNormTolerance);

/// Every single-particle subsystem {1}, ..., {n}.
std::vector<ParticleSet> single_particle_subsystems(int particles);

}  // namespace qmask
