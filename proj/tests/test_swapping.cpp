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

#include <cmath>
#include <map>
#include <set>

#include "qmask/oracle.hpp"
#include "qmask/swapping.hpp"
#include "qmask/verify.hpp"
#include "test_util.hpp"

using namespace qmask;
using namespace qmask::testing;

namespace {

using Transitions = std::map<std::string, std::string>;

Transitions transitions(const OutcomeDistribution& dist) {
  Transitions out;
  for (const auto& o : dist.outcomes) out[o.label] = o.remainder_label;
  return out;
}

void check_uniform(const OutcomeDistribution& dist, std::size_t count) {
  REQUIRE(dist.outcomes.size() == count);
  for (const auto& o : dist.outcomes) CHECK(std::abs(o.probability - 1.0 / static_cast<double>(count)) < 1e-12);
  CHECK(std::abs(dist.total_probability() - 1.0) < 1e-12);
}

int sign_of(const std::string& ghz_label) { return GhzLabel::parse(ghz_label).sign; }

}  // namespace

TEST_CASE("bell-bell table") {
  const auto same = predict_bell_bell({0, 0}, {0, 0});
  check_uniform(same, 4);
  CHECK(transitions(same) ==
        Transitions{{"G+(00)", "G+(00)"}, {"G-(00)", "G-(00)"}, {"G+(01)", "G+(01)"}, {"G-(01)", "G-(01)"}});

  const auto flipped = predict_bell_bell({0, 0}, {1, 0});
  check_uniform(flipped, 4);
  CHECK(transitions(flipped) ==
        Transitions{{"G+(00)", "G-(00)"}, {"G-(00)", "G+(00)"}, {"G+(01)", "G-(01)"}, {"G-(01)", "G+(01)"}});

  const auto crossed = predict_bell_bell({0, 0}, {0, 1});
  check_uniform(crossed, 4);
  CHECK(transitions(crossed) ==
        Transitions{{"G+(00)", "G+(01)"}, {"G-(00)", "G-(01)"}, {"G+(01)", "G+(00)"}, {"G-(01)", "G-(00)"}});

  for (const auto& o : same.outcomes) CHECK(o.remainder_order == std::vector<int>{2, 4});
  CHECK_THROWS_KIND(predict_bell_bell({2, 0}, {0, 0}), ErrorKind::BadLabel);
}

TEST_CASE("bell-bell explicit states") {
  const auto scenario = bell_bell_scenario({0, 0}, {0, 0});
  const auto dist = predict(scenario, Predictor::bell_bell);
  const auto* outcome = dist.find("G+(00)");
  REQUIRE(outcome);
  const auto [measured, remainder] = to_state(*outcome, scenario);
  CHECK(distance(measured, bell({0, 0})) < kTol);
  CHECK(fidelity(remainder, bell({0, 0})) > 1.0 - kTol);
}

TEST_CASE("cat swap sign patterns") {
  // Two GHZ_3 states, one particle of the first and two of the second
  // measured. Only the patterns (x, y, y) occur, so tails 00 and 11 survive.
  const auto even = predict_cat_swap({{{0, 0, 0}, 0}, {{0, 0, 0}, 0}}, {1, 2});
  check_uniform(even, 4);
  std::set<std::string> tails;
  for (const auto& o : even.outcomes) tails.insert(o.label.substr(2));
  CHECK(tails == std::set<std::string>{"(000)", "(011)"});
  for (const auto& o : even.outcomes) CHECK(sign_of(o.label) == sign_of(o.remainder_label));

  const auto odd = predict_cat_swap({{{0, 0, 0}, 0}, {{0, 0, 0}, 1}}, {1, 1});
  check_uniform(odd, 4);
  for (const auto& o : odd.outcomes) CHECK(sign_of(o.label) != sign_of(o.remainder_label));

  CHECK_THROWS_KIND(predict_cat_swap({{{0, 0}, 0}}, {1}), ErrorKind::BadScenario);
  CHECK_THROWS_KIND(predict_cat_swap({{{0, 0}, 0}, {{0, 0}, 0}}, {2, 2}), ErrorKind::BadScenario);
  CHECK_THROWS_KIND(predict_cat_swap({{{0, 0}, 0}, {{0, 0}, 0}}, {0, 1}), ErrorKind::BadScenario);
}

TEST_CASE("cat swap with non-canonical labels matches the oracle") {
  for (int lambda = 0; lambda < 2; ++lambda) {
    const std::vector<CatLabel> cats{{{1, 0, 1}, 0}, {{1, 1}, lambda}, {{0, 1, 1}, 1}};
    const std::vector<int> k{2, 1, 1};
    const auto s = cat_swap_scenario(cats, k);
    const auto report = compare(predict(s, Predictor::cat_swap), simulate_swap(s));
    CHECK(report.verdict);
  }
}

TEST_CASE("cat-bell forms") {
  const MaxEntLabel zero2(2, {0, 0});
  check_uniform(predict_cat_bell_clear(zero2, zero2, 2), 4);
  check_uniform(predict_cat_bell_karimipour(zero2, zero2, 2), 4);

  const MaxEntLabel zero3(3, {0, 0});
  check_uniform(predict_cat_bell_clear(zero3, zero3, 2), 9);

  // At (v1, v2) = (u1^2, u_k^1) the exponent vanishes and the coefficient is 1/d.
  const MaxEntLabel cat(3, {1, 2, 0});
  const MaxEntLabel pair(3, {2, 1});
  const auto clear = predict_cat_bell_clear(cat, pair, 2);
  const auto* at_zero = clear.find(MaxEntLabel(3, {2, 2}).to_string());
  REQUIRE(at_zero);
  CHECK(std::abs(at_zero->coefficient - 1.0 / 3.0) < kTol);

  CHECK_THROWS_KIND(predict_cat_bell_clear(cat, pair, 1), ErrorKind::BadScenario);
  CHECK_THROWS_KIND(predict_cat_bell_clear(cat, pair, 4), ErrorKind::BadScenario);
  CHECK_THROWS_KIND(predict_cat_bell_clear(cat, MaxEntLabel(2, {0, 0}), 2), ErrorKind::LevelMismatch);
}

TEST_CASE("cat-bell at d = 2 yields Bell remainders") {
  const MaxEntLabel zero(2, {0, 0});
  const auto scenario = cat_bell_scenario(zero, zero, 2);
  const auto dist = predict(scenario, Predictor::cat_bell_clear);
  const auto bells = bell_basis();
  check_uniform(dist, 4);
  for (const auto& o : dist.outcomes) {
    const auto remainder = remainder_in_ascending_order(o);
    bool found = false;
    for (const auto& member : bells.members()) found = found || fidelity(member.state, remainder) > 1.0 - kTol;
    CHECK(found);
  }
}

TEST_CASE("masked ghz parity") {
  const auto even = predict_masked_ghz_swap({0, 0});
  check_uniform(even, 4);
  CHECK(transitions(even) ==
        Transitions{{"G+(00)", "G+(00)"}, {"G-(00)", "G-(00)"}, {"G+(01)", "G+(01)"}, {"G-(01)", "G-(01)"}});

  const auto odd = predict_masked_ghz_swap({0, 1});
  check_uniform(odd, 4);
  CHECK(transitions(odd) ==
        Transitions{{"G+(00)", "G-(00)"}, {"G-(00)", "G+(00)"}, {"G+(01)", "G-(01)"}, {"G-(01)", "G+(01)"}});

  for (unsigned mask = 0; mask < 16; ++mask) {
    const auto lambdas = index_to_digits(mask, 2, 4);
    const int total = lambdas[0] + lambdas[1] + lambdas[2] + lambdas[3];
    for (const auto& o : predict_masked_ghz_swap(lambdas).outcomes) {
      CHECK((sign_of(o.label) == sign_of(o.remainder_label)) == (total % 2 == 0));
    }
  }
  CHECK_THROWS_KIND(predict_masked_ghz_swap({0}), ErrorKind::BadScenario);
}

TEST_CASE("masked qudit swap") {
  // Uniform d = 2 inputs with zero phases are the lambda = 0 qubit outputs.
  const PhaseAmplitudeInput flat2{{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)}, {0.0, 0.0}};
  const auto qudit = predict_masked_qudit_swap({flat2, flat2});
  const auto qubit = predict_masked_ghz_swap({0, 0});
  check_uniform(qudit, 4);
  for (const auto& o : qudit.outcomes) {
    const auto& u = o.label;  // phi(u1,u2)
    const GhzLabel relabeled(u[4] == '1' ? -1 : +1, {u[6] - '0'});
    const auto* match = qubit.find(relabeled.to_string());
    REQUIRE(match);
    CHECK(fidelity(remainder_in_ascending_order(o), remainder_in_ascending_order(*match)) > 1.0 - kTol);
  }

  const double third = 1.0 / std::sqrt(3.0);
  const PhaseAmplitudeInput flat3{{third, third, third}, {0.0, 0.0, 0.0}};
  const auto nine = predict_masked_qudit_swap({flat3, flat3});
  check_uniform(nine, 9);
  const auto maxent = max_entangled_basis(3, 2);
  for (const auto& o : nine.outcomes) {
    const auto remainder = remainder_in_ascending_order(o);
    bool found = false;
    for (const auto& member : maxent.members()) found = found || fidelity(member.state, remainder) > 1.0 - kTol;
    CHECK(found);
  }

  // eta = e_0: the inputs are |00>|00>; only phi(v1, 0) survives.
  const PhaseAmplitudeInput e0{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
  const auto product = predict_masked_qudit_swap({e0, e0});
  check_uniform(product, 3);
  std::set<std::string> labels;
  for (const auto& o : product.outcomes) {
    labels.insert(o.label);
    CHECK(distance(remainder_in_ascending_order(o), PureState::basis(3, {0, 0})) < 1e-12);
  }
  CHECK(labels == std::set<std::string>{"phi(0,0)", "phi(1,0)", "phi(2,0)"});

  CHECK_THROWS_KIND(predict_masked_qudit_swap({flat2, flat3}), ErrorKind::LevelMismatch);
}

TEST_CASE("li masked swap matches the oracle") {
  std::mt19937_64 rng(53);
  const QuditAmplitudes e0{{1.0, 0.0}};
  const QuditAmplitudes e1{{0.0, 1.0}};
  for (const auto& inputs : std::vector<std::vector<QuditAmplitudes>>{
           {e0, e0}, {e1, e1}, {e0, e1}, {random_amplitudes(rng, 2), random_amplitudes(rng, 2)}}) {
    const auto s = li_masked_scenario(inputs);
    CHECK(compare(predict(s, Predictor::li_masked), simulate_swap(s)).verdict);
  }
  const auto s3 = li_masked_scenario({random_amplitudes(rng, 3), random_amplitudes(rng, 3)});
  CHECK(compare(predict(s3, Predictor::li_masked), simulate_swap(s3)).verdict);
}

TEST_CASE("predict checks the scenario layout") {
  auto s = bell_bell_scenario({0, 0}, {0, 0});
  s.measured = ParticleSet{1, 2};
  CHECK_THROWS_KIND(predict(s, Predictor::bell_bell), ErrorKind::BadScenario);
  CHECK_THROWS_KIND(predict(bell_bell_scenario({0, 0}, {0, 0}), Predictor::cat_swap), ErrorKind::BadScenario);
  CHECK(parse_predictor("li_masked") == Predictor::li_masked);
  CHECK_THROWS_KIND(parse_predictor("nope"), ErrorKind::Schema);
}
