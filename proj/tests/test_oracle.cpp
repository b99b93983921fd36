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
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>

#include "qmask/oracle.hpp"
#include "qmask/swapping.hpp"
#include "qmask/verify.hpp"
#include "test_util.hpp"

using namespace qmask;
using namespace qmask::testing;

namespace {

// Every qmask header reachable from a source file through #include "qmask/...".
std::set<std::string> reachable_headers(const std::filesystem::path& root, const std::filesystem::path& start) {
  std::set<std::string> seen;
  std::vector<std::filesystem::path> pending{start};
  const std::regex include_line(R"re(^\s*#\s*include\s*"qmask/([a-z_]+\.hpp)")re");
  while (!pending.empty()) {
    const auto file = pending.back();
    pending.pop_back();
    std::ifstream in(file);
    REQUIRE_MESSAGE(in, "cannot open " << file);
    std::string line;
    std::smatch match;
    while (std::getline(in, line)) {
      if (!std::regex_search(line, match, include_line)) continue;
      if (seen.insert(match[1]).second) pending.push_back(root / "include" / "qmask" / match[1].str());
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("oracle does not depend on the predictors") {
  const std::filesystem::path root = QMASK_SOURCE_DIR;
  for (const auto& start : {root / "src" / "oracle.cpp", root / "include" / "qmask" / "oracle.hpp"}) {
    const auto headers = reachable_headers(root, start);
    CHECK(headers.count("scenario.hpp") + headers.count("oracle.hpp") >= 1);
    CHECK_MESSAGE(headers.count("swapping.hpp") == 0, start << " reaches swapping.hpp");
    CHECK(headers.count("verify.hpp") == 0);
  }
}

TEST_CASE("two bell states through the oracle") {
  const auto result = simulate_swap(bell_bell_scenario({0, 0}, {0, 0}));
  CHECK(std::abs(result.total_probability - 1.0) < 1e-12);
  REQUIRE(result.distribution.outcomes.size() == 4);
  for (const auto& o : result.distribution.outcomes) {
    CHECK(std::abs(o.probability - 0.25) < 1e-12);
    CHECK(o.remainder_order == std::vector<int>{2, 4});
    CHECK(fidelity(o.remainder, ghz(GhzLabel::parse(o.label))) > 1.0 - 1e-12);
  }
}

TEST_CASE("product inputs give a single outcome") {
  SwapScenario s;
  s.level = 3;
  s.inputs = {ProductInput{{2, 0}}, ProductInput{{1}}};
  s.measured = ParticleSet{1, 3};
  s.basis = BasisKind::computational;
  const auto result = simulate_swap(s);
  REQUIRE(result.distribution.outcomes.size() == 1);
  CHECK(result.distribution.outcomes.front().label == computational_label({2, 1}));
  CHECK(std::abs(result.distribution.outcomes.front().probability - 1.0) < 1e-12);
}

TEST_CASE("uniform masked qudit pairs") {
  const double third = 1.0 / std::sqrt(3.0);
  const PhaseAmplitudeInput flat{{third, third, third}, {0.0, 0.0, 0.0}};
  const auto result = simulate_swap(masked_qudit_scenario({flat, flat}));
  REQUIRE(result.distribution.outcomes.size() == 9);
  for (const auto& o : result.distribution.outcomes) CHECK(std::abs(o.probability - 1.0 / 9.0) < 1e-12);
}

TEST_CASE("predictor against oracle") {
  const auto s = bell_bell_scenario({0, 0}, {0, 0});
  const auto report = compare(predict(s, Predictor::bell_bell), simulate_swap(s));
  CHECK(report.verdict);
  CHECK(report.max_deviation < 1e-12);
  CHECK(report.missing == 0);
  CHECK(report.extra == 0);
}

TEST_CASE("an injected sign fault is caught") {
  const auto s = bell_bell_scenario({0, 0}, {0, 0});
  auto corrupted = predict(s, Predictor::bell_bell);
  auto& victim = corrupted.outcomes.front();
  // phi+ <-> phi- or psi+ <-> psi-: flip the relative sign of the remainder.
  Eigen::VectorXcd v = victim.remainder.amplitudes();
  for (Eigen::Index i = v.size() / 2; i < v.size(); ++i) v(i) = -v(i);
  victim.remainder = PureState(2, 2, v);
  const auto report = compare(corrupted, simulate_swap(s));
  CHECK_FALSE(report.verdict);
  int broken = 0;
  for (const auto& row : report.rows) broken += row.fidelity < 1e-9 ? 1 : 0;
  CHECK(broken == 1);
}

TEST_CASE("missing and extra outcomes") {
  const auto s = bell_bell_scenario({0, 0}, {0, 0});
  auto partial = predict(s, Predictor::bell_bell);
  partial.outcomes.pop_back();
  const auto oracle = simulate_swap(s);
  const auto missing = compare(partial, oracle);
  CHECK_FALSE(missing.verdict);
  CHECK(missing.missing == 1);
  const auto extra = compare(oracle.distribution, partial);
  CHECK(extra.extra == 1);
}

TEST_CASE("both cat-bell forms agree with each other and the oracle") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<int> digit(0, 2);
    const MaxEntLabel cat(3, {digit(rng), digit(rng), digit(rng)});
    const MaxEntLabel pair(3, {digit(rng), digit(rng)});
    const int k = 2 + trial % 2;
    const auto s = cat_bell_scenario(cat, pair, k);
    const auto first = predict(s, Predictor::cat_bell_karimipour);
    const auto second = predict(s, Predictor::cat_bell_clear);
    const auto oracle = simulate_swap(s);
    CHECK(compare(first, oracle).verdict);
    CHECK(compare(second, oracle).verdict);
    CHECK(compare(first, second).verdict);
  }
}

TEST_CASE("masked qudit swap with three inputs") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<PhaseAmplitudeInput> inputs;
    for (int r = 0; r < 3; ++r) inputs.push_back(random_phase_amplitude(rng, 2 + trial % 2));
    const auto s = masked_qudit_scenario(inputs);
    const auto report = compare(predict(s, Predictor::masked_qudit), simulate_swap(s));
    CHECK(report.verdict);
    CHECK(report.max_deviation < 1e-9);
  }
}
