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

#include "qmask/scenario.hpp"

#include <algorithm>
#include <numeric>

namespace qmask {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

int particle_count(const InputDescriptor& input) {
  return std::visit(overloaded{
                        [](const BellLabel&) { return 2; },
                        [](const CatLabel& c) { return c.size(); },
                        [](const MaxEntLabel& m) { return m.size(); },
                        [](const ModiQubitInput&) { return 2; },
                        [](const ModiQuditInput&) { return 2; },
                        [](const LiInput& li) { return 2 * li.input.level(); },
                        [](const ProductInput& p) { return static_cast<int>(p.digits.size()); },
                    },
                    input);
}

int input_level(const InputDescriptor& input) {
  return std::visit(overloaded{
                        [](const BellLabel&) { return 2; },
                        [](const CatLabel&) { return 2; },
                        [](const MaxEntLabel& m) { return m.level; },
                        [](const ModiQubitInput&) { return 2; },
                        [](const ModiQuditInput& q) { return q.input.level(); },
                        [](const LiInput& li) { return li.input.level(); },
                        [](const ProductInput&) { return 0; },
                    },
                    input);
}

PureState materialize(const InputDescriptor& input, int level) {
  const int own = input_level(input);
  if (own != 0 && own != level) {
    throw Error(ErrorKind::LevelMismatch, "input of level " + std::to_string(own) + " in a level-" +
                                              std::to_string(level) + " scenario");
  }
  return std::visit(overloaded{
                        [](const BellLabel& b) { return bell(b); },
                        [](const CatLabel& c) { return cat(c); },
                        [](const MaxEntLabel& m) { return max_entangled(m); },
                        [](const ModiQubitInput& q) { return mask_modi_qubit(q.l); },
                        [](const ModiQuditInput& q) { return mask_modi_qudit(q.input); },
                        [](const LiInput& li) { return mask_li_qudit(li.input); },
                        [level](const ProductInput& p) { return PureState::basis(level, p.digits); },
                    },
                    input);
}

const char* to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::ghz: return "ghz";
    case BasisKind::max_entangled: return "maxent";
    case BasisKind::computational: return "computational";
  }
  return "?";
}

BasisKind parse_basis_kind(const std::string& text) {
  if (text == "ghz") return BasisKind::ghz;
  if (text == "maxent") return BasisKind::max_entangled;
  if (text == "computational") return BasisKind::computational;
  throw Error(ErrorKind::Schema, "unknown basis kind '" + text + "'");
}

int SwapScenario::total_particles() const {
  int total = 0;
  for (const auto& input : inputs) total += particle_count(input);
  return total;
}

std::vector<std::pair<int, int>> SwapScenario::input_ranges() const {
  std::vector<std::pair<int, int>> ranges;
  int next = 1;
  for (const auto& input : inputs) {
    const int count = particle_count(input);
    ranges.emplace_back(next, next + count - 1);
    next += count;
  }
  return ranges;
}

std::vector<int> SwapScenario::effective_measured_order() const {
  if (!measured_order.empty()) return measured_order;
  return std::vector<int>(measured.begin(), measured.end());
}

void SwapScenario::validate() const {
  if (inputs.empty()) throw Error(ErrorKind::BadScenario, "scenario has no inputs");
  const int n = total_particles();
  checked_dimension(level, n);
  for (const auto& input : inputs) {
    const int own = input_level(input);
    if (own != 0 && own != level) throw Error(ErrorKind::LevelMismatch, "input level differs from scenario level");
  }
  if (measured.empty()) throw Error(ErrorKind::BadSubset, "no measured particles");
  measured.check_within(n);
  if (static_cast<int>(measured.size()) >= n) {
    throw Error(ErrorKind::BadScenario, "at least one particle must remain unmeasured");
  }
  if (!measured_order.empty()) {
    std::vector<int> sorted = measured_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::vector<int>(measured.begin(), measured.end())) {
      throw Error(ErrorKind::BadScenario, "measured_order must be a permutation of measured");
    }
  }
  if (basis == BasisKind::ghz && (level != 2 || measured.size() < 2)) {
    throw Error(ErrorKind::BadScenario, "GHZ basis needs level 2 and at least two measured particles");
  }
}

PureState materialize_inputs(const SwapScenario& scenario) {
  scenario.validate();
  std::vector<PureState> parts;
  parts.reserve(scenario.inputs.size());
  for (const auto& input : scenario.inputs) parts.push_back(materialize(input, scenario.level));
  return tensor(std::span<const PureState>(parts));
}

BasisSet measurement_basis(const SwapScenario& scenario) {
  const int k = static_cast<int>(scenario.measured.size());
  BasisSet basis = [&] {
    switch (scenario.basis) {
      case BasisKind::ghz: return ghz_basis(k);
      case BasisKind::max_entangled: return max_entangled_basis(scenario.level, k);
      case BasisKind::computational: return computational_basis(scenario.level, k);
    }
    throw Error(ErrorKind::BadScenario, "unknown basis kind");
  }();
  if (scenario.measured_order.empty()) return basis;
  // Member particle j sits on global position measured_order[j]; in ascending
  // layout, slot i takes the member particle whose position is measured[i].
  std::vector<int> order(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const auto it = std::find(scenario.measured_order.begin(), scenario.measured_order.end(),
                              scenario.measured[static_cast<std::size_t>(i)]);
    order[static_cast<std::size_t>(i)] = static_cast<int>(it - scenario.measured_order.begin());
  }
  return permuted(basis, order);
}

const PredictedOutcome* OutcomeDistribution::find(const std::string& label) const {
  for (const auto& o : outcomes) {
    if (o.label == label) return &o;
  }
  return nullptr;
}

double OutcomeDistribution::total_probability() const {
  double total = 0.0;
  for (const auto& o : outcomes) total += o.probability;
  return total;
}

void renormalize(OutcomeDistribution& distribution) {
  double total = 0.0;
  for (const auto& o : distribution.outcomes) total += std::norm(o.coefficient);
  if (!(total > 0.0)) throw Error(ErrorKind::BadScenario, "distribution has no support");
  distribution.normalization = std::sqrt(total);
  for (auto& o : distribution.outcomes) o.probability = std::norm(o.coefficient) / total;
  std::erase_if(distribution.outcomes, [](const PredictedOutcome& o) { return o.probability < kZeroProbability; });
}

PureState remainder_in_ascending_order(const PredictedOutcome& outcome) {
  const auto& positions = outcome.remainder_order;
  if (positions.size() != static_cast<std::size_t>(outcome.remainder.particles())) {
    throw Error(ErrorKind::ShapeMismatch, "remainder order does not match remainder size");
  }
  std::vector<int> order(positions.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return positions[static_cast<std::size_t>(a)] < positions[static_cast<std::size_t>(b)];
  });
  return permute(outcome.remainder, order);
}

SwapScenario bell_bell_scenario(const BellLabel& first, const BellLabel& second) {
  SwapScenario s;
  s.name = "bell-bell";
  s.level = 2;
  s.inputs = {first, second};
  s.measured = ParticleSet{1, 3};
  s.basis = BasisKind::ghz;
  return s;
}

SwapScenario cat_swap_scenario(const std::vector<CatLabel>& cats, const std::vector<int>& k) {
  if (cats.size() != k.size()) throw Error(ErrorKind::BadScenario, "one k per cat state");
  SwapScenario s;
  s.name = "cat-swap";
  s.level = 2;
  std::vector<int> measured;
  int offset = 0;
  for (std::size_t r = 0; r < cats.size(); ++r) {
    if (k[r] < 1 || k[r] > cats[r].size()) throw Error(ErrorKind::BadScenario, "k_r must lie in [1, m_r]");
    s.inputs.emplace_back(cats[r]);
    for (int i = 1; i <= k[r]; ++i) measured.push_back(offset + i);
    offset += cats[r].size();
  }
  s.measured = ParticleSet(std::move(measured));
  s.basis = BasisKind::ghz;
  return s;
}

SwapScenario cat_bell_scenario(const MaxEntLabel& cat_label, const MaxEntLabel& pair, int k) {
  const int m = cat_label.size();
  if (k < 1 || k > m) throw Error(ErrorKind::BadScenario, "measured cat position out of range");
  SwapScenario s;
  s.name = "cat-bell";
  s.level = cat_label.level;
  s.inputs = {cat_label, pair};
  s.measured = ParticleSet{k, m + 1};
  s.measured_order = {m + 1, k};
  s.basis = BasisKind::max_entangled;
  return s;
}

SwapScenario masked_ghz_scenario(const std::vector<int>& lambdas) {
  SwapScenario s;
  s.name = "masked-ghz";
  s.level = 2;
  std::vector<int> measured;
  for (std::size_t r = 0; r < lambdas.size(); ++r) {
    s.inputs.emplace_back(ModiQubitInput{lambdas[r]});
    measured.push_back(static_cast<int>(2 * r + 1));
  }
  s.measured = ParticleSet(std::move(measured));
  s.basis = BasisKind::ghz;
  return s;
}

SwapScenario masked_qudit_scenario(const std::vector<PhaseAmplitudeInput>& inputs) {
  if (inputs.empty()) throw Error(ErrorKind::BadScenario, "no inputs");
  SwapScenario s;
  s.name = "masked-qudit";
  s.level = inputs.front().level();
  std::vector<int> measured;
  for (std::size_t r = 0; r < inputs.size(); ++r) {
    s.inputs.emplace_back(ModiQuditInput{inputs[r]});
    measured.push_back(static_cast<int>(2 * r + 1));
  }
  s.measured = ParticleSet(std::move(measured));
  s.basis = BasisKind::max_entangled;
  return s;
}

SwapScenario li_masked_scenario(const std::vector<QuditAmplitudes>& inputs) {
  if (inputs.empty()) throw Error(ErrorKind::BadScenario, "no inputs");
  SwapScenario s;
  s.name = "li-masked";
  s.level = inputs.front().level();
  const int block = 2 * s.level;
  std::vector<int> measured;
  for (std::size_t r = 0; r < inputs.size(); ++r) {
    s.inputs.emplace_back(LiInput{inputs[r]});
    measured.push_back(static_cast<int>(r) * block + 1);
  }
  s.measured = ParticleSet(std::move(measured));
  s.basis = BasisKind::max_entangled;
  return s;
}

}  // namespace qmask
