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

#include "qmask/swapping.hpp"

#include <array>
#include <cmath>

namespace qmask {

namespace {

int parity_sign(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

// Bell states by name.
enum class BellName { phi_plus, phi_minus, psi_plus, psi_minus };

BellLabel bell_label(BellName name) {
  switch (name) {
    case BellName::phi_plus: return {0, 0};
    case BellName::phi_minus: return {1, 0};
    case BellName::psi_plus: return {0, 1};
    case BellName::psi_minus: return {1, 1};
  }
  return {};
}

struct BellTerm {
  int sign;
  BellName measured;   // particles 1, 3
  BellName remainder;  // particles 2, 4
};

struct BellGroup {
  int bracket;  // 0: 1 + s1 s2, 1: 1 - s1 s2, 2: s2 + s1, 3: s2 - s1
  std::array<BellTerm, 2> terms;
};

using BellBranch = std::array<BellGroup, 4>;

constexpr BellName PP = BellName::phi_plus;
constexpr BellName PM = BellName::phi_minus;
constexpr BellName SP = BellName::psi_plus;
constexpr BellName SM = BellName::psi_minus;

// One branch per (a_1 a_2) = 00, 01, 10, 11.
const std::array<BellBranch, 4> kBellTable = {{
    {{{0, {{{+1, PP, PP}, {+1, PM, PM}}}},
      {1, {{{+1, PP, PM}, {+1, PM, PP}}}},
      {2, {{{+1, SP, SP}, {+1, SM, SM}}}},
      {3, {{{+1, SP, SM}, {+1, SM, SP}}}}}},
    {{{0, {{{+1, PP, SP}, {+1, PM, SM}}}},
      {1, {{{+1, PP, SM}, {+1, PM, SP}}}},
      {2, {{{+1, SP, PP}, {+1, SM, PM}}}},
      {3, {{{+1, SP, PM}, {+1, SM, PP}}}}}},
    {{{0, {{{+1, PP, SP}, {-1, PM, SM}}}},
      {1, {{{+1, PM, SP}, {-1, PP, SM}}}},
      {2, {{{+1, SP, PP}, {-1, SM, PM}}}},
      {3, {{{+1, SM, PP}, {-1, SP, PM}}}}}},
    {{{0, {{{+1, PP, PP}, {-1, PM, PM}}}},
      {1, {{{+1, PM, PP}, {-1, PP, PM}}}},
      {2, {{{+1, SP, SP}, {-1, SM, SM}}}},
      {3, {{{+1, SM, SP}, {-1, SP, SM}}}}}},
}};

void require_bit(int value, const char* what) {
  if (value != 0 && value != 1) throw Error(ErrorKind::BadLabel, std::string(what) + " must be 0 or 1");
}

// Cat-pair sign weights for a branch: same-sign pairs get a + b, mixed-sign a - b.
void emit_cat_pairs(OutcomeDistribution& out, int a, int b, const std::vector<int>& measured_bits,
                    const std::vector<int>& remainder_bits, const std::vector<int>& remainder_order) {
  for (int sp : {+1, -1}) {
    for (int sq : {+1, -1}) {
      const int weight = (sp == sq) ? a + b : a - b;
      if (weight == 0) continue;
      // |b> - |b-bar> is minus the canonical member when b starts with 1.
      const int flip = (sp < 0 && measured_bits.front() == 1) ? -1 : 1;
      out.outcomes.push_back(PredictedOutcome{cat_label_string(sp, measured_bits), Complex(weight * flip, 0.0),
                                              cat_label_string(sq, remainder_bits),
                                              cat_superposition(sq, remainder_bits), remainder_order, 0.0});
    }
  }
}

void check_cat_bell(const MaxEntLabel& cat_label, const MaxEntLabel& pair, int k) {
  if (cat_label.level != pair.level) throw Error(ErrorKind::LevelMismatch, "cat and pair differ in level");
  if (pair.size() != 2) throw Error(ErrorKind::BadLabel, "the pair label must have two entries");
  if (cat_label.size() < 2) throw Error(ErrorKind::BadLabel, "the cat label needs m >= 2");
  if (k < 2 || k > cat_label.size()) {
    throw Error(ErrorKind::BadScenario, "the closed forms need the measured cat particle k in [2, m]");
  }
}

// Remainder layout of the cat-bell forms: cat slots 1..m with slot k taken by
// the pair's second particle.
std::vector<int> cat_bell_remainder_order(int m, int k) {
  std::vector<int> order;
  for (int i = 1; i <= m; ++i) order.push_back(i == k ? m + 2 : i);
  return order;
}

// Outcomes whose remainder is an explicit unnormalized ket. The coefficient is
// the ket's norm; kets that carry less than kZeroProbability of the total
// weight are dropped before normalizing.
void emit_explicit(OutcomeDistribution& out, std::vector<std::pair<std::string, Ket>> kets,
                   const std::vector<int>& remainder_order) {
  double total = 0.0;
  for (const auto& entry : kets) total += entry.second.norm() * entry.second.norm();
  for (auto& [label, ket] : kets) {
    const double weight = ket.norm();
    if (weight * weight < kZeroProbability * total) continue;
    out.outcomes.push_back(
        PredictedOutcome{std::move(label), Complex(weight, 0.0), "", ket.normalized(), remainder_order, 0.0});
  }
}

OutcomeDistribution cat_bell_outcomes(const MaxEntLabel& cat_label, const MaxEntLabel& pair, int k,
                                      bool karimipour_form) {
  check_cat_bell(cat_label, pair, k);
  const int d = cat_label.level;
  const int m = cat_label.size();
  const auto& u = cat_label.u;
  const int w1 = pair.u[0];
  const int w2 = pair.u[1];
  const int uk = u[static_cast<std::size_t>(k - 1)];

  OutcomeDistribution out;
  out.provenance = karimipour_form ? "cat_bell_karimipour" : "cat_bell_clear";
  const auto order = cat_bell_remainder_order(m, k);
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      int v1, v2, head, slot;
      Complex coefficient;
      if (karimipour_form) {
        const int l1 = x;
        const int l2 = y;
        v1 = mod(w1 - l2, d);
        v2 = mod(uk - l1, d);
        head = mod(u[0] + l2, d);
        slot = mod(w2 + l1, d);
        coefficient = root_of_unity(d, static_cast<long long>(l1) * l2) / static_cast<double>(d);
      } else {
        v1 = x;
        v2 = y;
        head = mod(u[0] + w1 - v1, d);
        slot = mod(w2 + uk - v2, d);
        coefficient =
            root_of_unity(d, static_cast<long long>(mod(uk - v2, d)) * mod(w1 - v1, d)) / static_cast<double>(d);
      }
      std::vector<int> remainder_u = u;
      remainder_u[0] = head;
      remainder_u[static_cast<std::size_t>(k - 1)] = slot;
      const MaxEntLabel remainder(d, remainder_u);
      out.outcomes.push_back(PredictedOutcome{MaxEntLabel(d, {v1, v2}).to_string(), coefficient,
                                              remainder.to_string(), max_entangled(remainder), order, 0.0});
    }
  }
  renormalize(out);
  return out;
}

}  // namespace

const char* to_string(Predictor predictor) {
  switch (predictor) {
    case Predictor::bell_bell: return "bell_bell";
    case Predictor::cat_swap: return "cat_swap";
    case Predictor::cat_bell_karimipour: return "cat_bell_karimipour";
    case Predictor::cat_bell_clear: return "cat_bell_clear";
    case Predictor::masked_ghz: return "masked_ghz";
    case Predictor::masked_qudit: return "masked_qudit";
    case Predictor::li_masked: return "li_masked";
  }
  return "?";
}

Predictor parse_predictor(const std::string& text) {
  for (Predictor p : {Predictor::bell_bell, Predictor::cat_swap, Predictor::cat_bell_karimipour,
                      Predictor::cat_bell_clear, Predictor::masked_ghz, Predictor::masked_qudit,
                      Predictor::li_masked}) {
    if (text == to_string(p)) return p;
  }
  throw Error(ErrorKind::Schema, "unknown predictor '" + text + "'");
}

OutcomeDistribution predict_bell_bell(const BellLabel& first, const BellLabel& second) {
  for (const auto* l : {&first, &second}) {
    require_bit(l->lambda, "lambda");
    require_bit(l->a, "a");
  }
  const int s1 = parity_sign(first.lambda);
  const int s2 = parity_sign(second.lambda);
  const std::array<int, 4> brackets = {1 + s1 * s2, 1 - s1 * s2, s2 + s1, s2 - s1};
  const BellBranch& branch = kBellTable[static_cast<std::size_t>(2 * first.a + second.a)];

  OutcomeDistribution out;
  out.provenance = "bell_bell";
  for (const BellGroup& group : branch) {
    const int bracket = brackets[static_cast<std::size_t>(group.bracket)];
    if (bracket == 0) continue;
    for (const BellTerm& term : group.terms) {
      const BellLabel remainder = bell_label(term.remainder);
      out.outcomes.push_back(PredictedOutcome{GhzLabel::from_bell(bell_label(term.measured)).to_string(),
                                              Complex(bracket * term.sign, 0.0),
                                              GhzLabel::from_bell(remainder).to_string(), bell(remainder),
                                              {2, 4}, 0.0});
    }
  }
  renormalize(out);
  return out;
}

OutcomeDistribution predict_cat_swap(const std::vector<CatLabel>& cats, const std::vector<int>& k) {
  const int n = static_cast<int>(cats.size());
  if (n < 2) throw Error(ErrorKind::BadScenario, "cat swapping needs at least two cat states");
  if (k.size() != cats.size()) throw Error(ErrorKind::BadScenario, "one k per cat state");
  if (n > 30) throw Error(ErrorKind::DimensionTooLarge, "too many cat states");
  int total_lambda = 0;
  int remainder_count = 0;
  for (int r = 0; r < n; ++r) {
    const auto& c = cats[static_cast<std::size_t>(r)];
    if (c.size() < 2) throw Error(ErrorKind::BadLabel, "cat states need m >= 2");
    require_bit(c.lambda, "lambda");
    for (int b : c.bits) require_bit(b, "cat bit");
    const int kr = k[static_cast<std::size_t>(r)];
    if (kr < 1 || kr > c.size()) throw Error(ErrorKind::BadScenario, "k_r must lie in [1, m_r]");
    total_lambda += c.lambda;
    remainder_count += c.size() - kr;
  }
  if (remainder_count == 0) throw Error(ErrorKind::BadScenario, "no particle left unmeasured");

  // Sign exponent of the |b> branch, using the complement of each label's first bit.
  int x = 0;
  for (int r = 1; r < n; ++r) x += (1 - cats[static_cast<std::size_t>(r)].bits.front()) * cats[static_cast<std::size_t>(r)].lambda;
  const int a = parity_sign(x);
  const int b = parity_sign(total_lambda - x);

  std::vector<int> remainder_order;
  {
    int offset = 0;
    for (int r = 0; r < n; ++r) {
      for (int i = k[static_cast<std::size_t>(r)] + 1; i <= cats[static_cast<std::size_t>(r)].size(); ++i) {
        remainder_order.push_back(offset + i);
      }
      offset += cats[static_cast<std::size_t>(r)].size();
    }
  }

  OutcomeDistribution out;
  out.provenance = "cat_swap";
  // Branch j: which cats (beyond the first) contribute their complemented string.
  const unsigned branches = 1u << (n - 1);
  for (unsigned j = 0; j < branches; ++j) {
    std::vector<int> measured_bits;
    std::vector<int> remainder_bits;
    for (int r = 0; r < n; ++r) {
      const int flip = r == 0 ? 0 : static_cast<int>((j >> (n - 1 - r)) & 1u);
      const auto& c = cats[static_cast<std::size_t>(r)];
      const int kr = k[static_cast<std::size_t>(r)];
      for (int i = 0; i < c.size(); ++i) {
        (i < kr ? measured_bits : remainder_bits).push_back(c.bits[static_cast<std::size_t>(i)] ^ flip);
      }
    }
    emit_cat_pairs(out, a, b, measured_bits, remainder_bits, remainder_order);
  }
  renormalize(out);
  return out;
}

OutcomeDistribution predict_cat_bell_karimipour(const MaxEntLabel& cat_label, const MaxEntLabel& pair, int k) {
  return cat_bell_outcomes(cat_label, pair, k, true);
}

OutcomeDistribution predict_cat_bell_clear(const MaxEntLabel& cat_label, const MaxEntLabel& pair, int k) {
  return cat_bell_outcomes(cat_label, pair, k, false);
}

OutcomeDistribution predict_masked_ghz_swap(const std::vector<int>& lambdas) {
  const int n = static_cast<int>(lambdas.size());
  if (n < 2) throw Error(ErrorKind::BadScenario, "GHZ swapping needs at least two states");
  if (n > 11) throw Error(ErrorKind::DimensionTooLarge, "2n qubits exceed the dimension cap");
  int total_lambda = 0;
  for (int l : lambdas) {
    require_bit(l, "lambda");
    total_lambda += l;
  }
  std::vector<int> evens;
  for (int r = 1; r <= n; ++r) evens.push_back(2 * r);

  OutcomeDistribution out;
  out.provenance = "masked_ghz";
  const unsigned count = 1u << (n - 1);
  for (unsigned p = 0; p < count; ++p) {
    const GhzLabel plus = GhzLabel::from_index(n, +1, p);
    int x = 0;
    for (int i = 2; i <= n; ++i) x += plus.bits[static_cast<std::size_t>(i - 2)] * lambdas[static_cast<std::size_t>(i - 1)];
    const int a = parity_sign(x);
    const int b = parity_sign(total_lambda - x);
    for (int sp : {+1, -1}) {
      for (int sq : {+1, -1}) {
        const int weight = (sp == sq) ? a + b : a - b;
        if (weight == 0) continue;
        const GhzLabel measured = GhzLabel::from_index(n, sp, p);
        const GhzLabel remainder = GhzLabel::from_index(n, sq, p);
        out.outcomes.push_back(PredictedOutcome{measured.to_string(), Complex(weight, 0.0), remainder.to_string(),
                                                ghz(remainder), evens, 0.0});
      }
    }
  }
  renormalize(out);
  return out;
}

OutcomeDistribution predict_masked_qudit_swap(const std::vector<PhaseAmplitudeInput>& inputs) {
  const int n = static_cast<int>(inputs.size());
  if (n < 2) throw Error(ErrorKind::BadScenario, "swapping needs at least two states");
  const int d = inputs.front().level();
  for (const auto& in : inputs) {
    in.validate();
    if (in.level() != d) throw Error(ErrorKind::LevelMismatch, "inputs differ in level");
  }
  checked_dimension(d, 2 * n);
  std::vector<int> evens;
  for (int r = 1; r <= n; ++r) evens.push_back(2 * r);

  OutcomeDistribution out;
  out.provenance = "masked_qudit";
  const std::size_t outcomes = checked_dimension(d, n);
  std::vector<std::pair<std::string, Ket>> kets;
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (std::size_t vi = 0; vi < outcomes; ++vi) {
    const auto v = index_to_digits(vi, d, n);
    Ket ket(d, n);
    for (int a1 = 0; a1 < d; ++a1) {
      // The measurement fixes a_r = a_1 + v_r for r >= 2.
      Complex amplitude = root_of_unity(d, -static_cast<long long>(a1) * v[0]);
      double phase = 0.0;
      for (int r = 0; r < n; ++r) {
        const int ar = r == 0 ? a1 : mod(a1 + v[static_cast<std::size_t>(r)], d);
        digits[static_cast<std::size_t>(r)] = ar;
        amplitude *= inputs[static_cast<std::size_t>(r)].eta[static_cast<std::size_t>(ar)];
        phase += inputs[static_cast<std::size_t>(r)].theta[static_cast<std::size_t>(ar)];
      }
      ket.add(digits, amplitude * std::polar(1.0, phase));
    }
    kets.emplace_back(MaxEntLabel(d, v).to_string(), std::move(ket));
  }
  emit_explicit(out, std::move(kets), evens);
  renormalize(out);
  return out;
}

OutcomeDistribution predict_li_masked_swap(const std::vector<QuditAmplitudes>& inputs) {
  const int n = static_cast<int>(inputs.size());
  if (n < 2) throw Error(ErrorKind::BadScenario, "swapping needs at least two states");
  const int d = inputs.front().level();
  for (const auto& in : inputs) {
    in.validate();
    if (in.level() != d) throw Error(ErrorKind::LevelMismatch, "inputs differ in level");
  }
  const int block = 2 * d;
  checked_dimension(d, block * n);
  const int rest_per_state = block - 1;
  std::vector<int> remainder_order;
  for (int r = 0; r < n; ++r) {
    for (int i = 2; i <= block; ++i) remainder_order.push_back(r * block + i);
  }

  // f_r(omega) = sum_k alpha^r_k zeta^{omega k}
  std::vector<std::vector<Complex>> folded(static_cast<std::size_t>(n), std::vector<Complex>(static_cast<std::size_t>(d)));
  for (int r = 0; r < n; ++r) {
    for (int w = 0; w < d; ++w) {
      Complex sum = 0.0;
      for (int k = 0; k < d; ++k) {
        sum += inputs[static_cast<std::size_t>(r)].alpha[static_cast<std::size_t>(k)] *
               root_of_unity(d, static_cast<long long>(w) * k);
      }
      folded[static_cast<std::size_t>(r)][static_cast<std::size_t>(w)] = sum;
    }
  }

  OutcomeDistribution out;
  out.provenance = "li_masked";
  const std::size_t outcomes = checked_dimension(d, n);
  // Free labels: a_0^1 followed by a_1^r .. a_{d-1}^r for every r.
  const int free_digits = 1 + n * (d - 1);
  const std::size_t free_count = checked_dimension(d, free_digits);
  std::vector<int> digits(static_cast<std::size_t>(n * rest_per_state));
  std::vector<std::pair<std::string, Ket>> kets;
  for (std::size_t vi = 0; vi < outcomes; ++vi) {
    const auto v = index_to_digits(vi, d, n);
    Ket ket(d, n * rest_per_state);
    for (std::size_t fi = 0; fi < free_count; ++fi) {
      const auto free = index_to_digits(fi, d, free_digits);
      const int a01 = free[0];
      Complex amplitude = root_of_unity(d, -static_cast<long long>(a01) * v[0]);
      for (int r = 0; r < n; ++r) {
        const int a0 = r == 0 ? a01 : mod(a01 + v[static_cast<std::size_t>(r)], d);
        long long omega = a0;
        std::size_t pos = static_cast<std::size_t>(r * rest_per_state);
        digits[pos++] = a0;
        for (int i = 1; i < d; ++i) {
          const int ai = free[static_cast<std::size_t>(1 + r * (d - 1) + (i - 1))];
          omega += ai;
          digits[pos++] = ai;
          digits[pos++] = ai;
        }
        amplitude *= folded[static_cast<std::size_t>(r)][static_cast<std::size_t>(mod(omega, d))];
      }
      ket.add(digits, amplitude);
    }
    kets.emplace_back(MaxEntLabel(d, v).to_string(), std::move(ket));
  }
  emit_explicit(out, std::move(kets), remainder_order);
  renormalize(out);
  return out;
}

namespace {

template <class T>
std::vector<T> inputs_of(const SwapScenario& s, const char* kind) {
  std::vector<T> out;
  for (const auto& in : s.inputs) {
    const T* value = std::get_if<T>(&in);
    if (!value) throw Error(ErrorKind::BadScenario, std::string("predictor expects only ") + kind + " inputs");
    out.push_back(*value);
  }
  return out;
}

void require_layout(const SwapScenario& s, const SwapScenario& expected, const char* predictor) {
  if (s.level != expected.level || s.measured != expected.measured || s.basis != expected.basis ||
      s.effective_measured_order() != expected.effective_measured_order()) {
    throw Error(ErrorKind::BadScenario,
                std::string("scenario layout does not match the ") + predictor + " measurement layout");
  }
}

}  // namespace

OutcomeDistribution predict(const SwapScenario& s, Predictor predictor) {
  s.validate();
  switch (predictor) {
    case Predictor::bell_bell: {
      const auto labels = inputs_of<BellLabel>(s, "bell");
      if (labels.size() != 2) throw Error(ErrorKind::BadScenario, "bell_bell needs two Bell states");
      require_layout(s, bell_bell_scenario(labels[0], labels[1]), "bell_bell");
      return predict_bell_bell(labels[0], labels[1]);
    }
    case Predictor::cat_swap: {
      const auto cats = inputs_of<CatLabel>(s, "cat");
      std::vector<int> k;
      for (const auto& [first, last] : s.input_ranges()) {
        int count = 0;
        for (int p = first; p <= last; ++p) count += s.measured.contains(p) ? 1 : 0;
        k.push_back(count);
      }
      for (int kr : k) {
        if (kr < 1) throw Error(ErrorKind::BadScenario, "cat_swap measures at least one particle of every cat");
      }
      require_layout(s, cat_swap_scenario(cats, k), "cat_swap");
      return predict_cat_swap(cats, k);
    }
    case Predictor::cat_bell_karimipour:
    case Predictor::cat_bell_clear: {
      const auto labels = inputs_of<MaxEntLabel>(s, "maxent");
      if (labels.size() != 2 || s.measured_order.size() != 2) {
        throw Error(ErrorKind::BadScenario, "cat-bell predictors need a cat, a pair and an explicit measured_order");
      }
      const int k = s.measured_order[1];
      require_layout(s, cat_bell_scenario(labels[0], labels[1], k), to_string(predictor));
      return predictor == Predictor::cat_bell_karimipour ? predict_cat_bell_karimipour(labels[0], labels[1], k)
                                                         : predict_cat_bell_clear(labels[0], labels[1], k);
    }
    case Predictor::masked_ghz: {
      std::vector<int> lambdas;
      for (const auto& in : inputs_of<ModiQubitInput>(s, "modi_qubit")) lambdas.push_back(in.l);
      require_layout(s, masked_ghz_scenario(lambdas), "masked_ghz");
      return predict_masked_ghz_swap(lambdas);
    }
    case Predictor::masked_qudit: {
      std::vector<PhaseAmplitudeInput> inputs;
      for (const auto& in : inputs_of<ModiQuditInput>(s, "modi_qudit")) inputs.push_back(in.input);
      require_layout(s, masked_qudit_scenario(inputs), "masked_qudit");
      return predict_masked_qudit_swap(inputs);
    }
    case Predictor::li_masked: {
      std::vector<QuditAmplitudes> inputs;
      for (const auto& in : inputs_of<LiInput>(s, "li")) inputs.push_back(in.input);
      require_layout(s, li_masked_scenario(inputs), "li_masked");
      return predict_li_masked_swap(inputs);
    }
  }
  throw Error(ErrorKind::BadScenario, "unknown predictor");
}

std::pair<PureState, PureState> to_state(const PredictedOutcome& outcome, const SwapScenario& scenario) {
  const BasisSet basis = measurement_basis(scenario);
  const BasisMember* member = basis.find(outcome.label);
  if (!member) throw Error(ErrorKind::BadLabel, "'" + outcome.label + "' is not a member of the scenario basis");
  std::vector<int> sorted = outcome.remainder_order;
  std::sort(sorted.begin(), sorted.end());
  const auto expected = scenario.measured.complement(scenario.total_particles());
  if (sorted != std::vector<int>(expected.begin(), expected.end())) {
    throw Error(ErrorKind::BadLabel, "remainder particles do not match the unmeasured particles");
  }
  return {member->state, remainder_in_ascending_order(outcome)};
}

}  // namespace qmask
