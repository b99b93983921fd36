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

#include "qmask/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace qmask {

OracleResult simulate_swap(const SwapScenario& scenario) {
  const PureState state = materialize_inputs(scenario);
  const BasisSet basis = measurement_basis(scenario);
  const ParticleSet rest = scenario.measured.complement(state.particles());

  // Row i of `projected` is <b_i| applied to the measured particles.
  const Eigen::MatrixXcd blocks = split_amplitudes(state, scenario.measured);
  const Eigen::MatrixXcd projected = basis.as_matrix().adjoint() * blocks;

  OracleResult result;
  result.distribution.provenance = "oracle";
  const std::vector<int> order(rest.begin(), rest.end());
  const int remaining = static_cast<int>(rest.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    const double probability = projected.row(row).squaredNorm();
    result.total_probability += probability;
    if (probability < kZeroProbability) continue;
    Eigen::VectorXcd remainder = projected.row(row).transpose();
    result.distribution.outcomes.push_back(PredictedOutcome{basis.members()[i].label,
                                                            Complex(std::sqrt(probability), 0.0), "",
                                                            PureState(scenario.level, remaining, std::move(remainder)),
                                                            order, probability});
  }
  result.distribution.normalization = std::sqrt(result.total_probability);
  return result;
}

ComparisonReport compare(const OutcomeDistribution& predicted, const OutcomeDistribution& reference, double tol) {
  ComparisonReport report;
  report.tolerance = tol;
  for (const auto& ref : reference.outcomes) {
    OutcomeComparison row;
    row.label = ref.label;
    row.reference_probability = ref.probability;
    const PredictedOutcome* pred = predicted.find(ref.label);
    if (!pred) {
      row.missing = true;
      row.deviation = ref.probability;
      ++report.missing;
    } else {
      row.predicted_probability = pred->probability;
      row.deviation = std::abs(pred->probability - ref.probability);
      const PureState a = remainder_in_ascending_order(*pred);
      const PureState b = remainder_in_ascending_order(ref);
      row.fidelity = (a.level() == b.level() && a.particles() == b.particles()) ? fidelity(a, b) : 0.0;
    }
    report.rows.push_back(std::move(row));
  }
  for (const auto& pred : predicted.outcomes) {
    if (reference.find(pred.label)) continue;
    OutcomeComparison row;
    row.label = pred.label;
    row.predicted_probability = pred.probability;
    row.deviation = pred.probability;
    row.extra = true;
    ++report.extra;
    report.rows.push_back(std::move(row));
  }
  for (const auto& row : report.rows) {
    report.max_deviation = std::max(report.max_deviation, row.deviation);
    report.min_fidelity = std::min(report.min_fidelity, row.fidelity);
  }
  report.verdict = report.missing == 0 && report.extra == 0 && report.max_deviation <= tol &&
                   report.min_fidelity >= 1.0 - tol;
  return report;
}

ComparisonReport compare(const OutcomeDistribution& predicted, const OracleResult& oracle, double tol) {
  return compare(predicted, oracle.distribution, tol);
}

}  // namespace qmask
