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
#include <numbers>

#include "qmask/qudit.hpp"
#include "test_util.hpp"

using namespace qmask;
using namespace qmask::testing;

namespace {
const double kHalfRoot = 1.0 / std::sqrt(2.0);
}

TEST_CASE("dimension cap") {
  CHECK(checked_dimension(2, 22) == (std::size_t{1} << 22));
  CHECK(checked_dimension(11, 1) == 11);
  CHECK_THROWS_KIND(checked_dimension(2, 23), ErrorKind::DimensionTooLarge);
  CHECK_THROWS_KIND(checked_dimension(5, 10), ErrorKind::DimensionTooLarge);
  CHECK_THROWS_KIND(PureState::basis(2, std::vector<int>(23, 0)), ErrorKind::DimensionTooLarge);
}

TEST_CASE("flat index round trip") {
  // Big-endian: particle 1 is the most significant digit.
  CHECK(digits_to_index(std::vector<int>{1, 0}, 2) == 2);
  CHECK(digits_to_index(std::vector<int>{2, 1}, 3) == 7);
  CHECK(index_to_digits(7, 3, 2) == std::vector<int>{2, 1});

  std::mt19937_64 rng(11);
  for (int d = 2; d <= 11; ++d) {
    const int n_max = static_cast<int>(std::floor(22.0 / std::log2(static_cast<double>(d))));
    for (int n = 1; n <= n_max; ++n) {
      const std::size_t dim = checked_dimension(d, n);
      std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
      for (int trial = 0; trial < 20; ++trial) {
        const std::size_t index = trial == 0 ? dim - 1 : pick(rng);
        REQUIRE(digits_to_index(index_to_digits(index, d, n), d) == index);
      }
    }
  }
}

TEST_CASE("digits out of range") {
  CHECK_THROWS_KIND(digits_to_index(std::vector<int>{0, 2}, 2), ErrorKind::BadLabel);
}

TEST_CASE("particle sets") {
  const ParticleSet s{3, 1};
  CHECK(std::vector<int>(s.begin(), s.end()) == std::vector<int>{1, 3});
  CHECK(s.complement(4) == ParticleSet{2, 4});
  CHECK_THROWS_KIND((ParticleSet{1, 1}), ErrorKind::BadSubset);
  CHECK_THROWS_KIND((ParticleSet{0}), ErrorKind::BadSubset);
  CHECK_THROWS_KIND(s.complement(2), ErrorKind::BadSubset);
}

TEST_CASE("pure state construction") {
  const auto psi = state_of(2, 1, {3.0, Complex(0.0, 4.0)});
  CHECK(std::abs(psi.amplitudes()(0) - 0.6) < kTol);
  CHECK(std::abs(psi.amplitudes()(1) - Complex(0.0, 0.8)) < kTol);
  CHECK_THROWS_KIND(state_of(2, 1, {0.0, 0.0}), ErrorKind::BadInput);
  CHECK_THROWS_KIND(state_of(2, 1, {std::nan(""), 1.0}), ErrorKind::BadInput);
  CHECK_THROWS_KIND(state_of(2, 2, {1.0, 0.0}), ErrorKind::ShapeMismatch);
  CHECK_THROWS_KIND(PureState(2, 0, Eigen::VectorXcd::Ones(1)), ErrorKind::ShapeMismatch);
}

TEST_CASE("tensor product") {
  const auto zero = PureState::basis(2, {0});
  const auto one = PureState::basis(2, {1});
  const auto plus = state_of(2, 1, {1.0, 1.0});
  const auto phi = state_of(2, 2, {1.0, 0.0, 0.0, 1.0});

  const auto z1 = tensor(zero, one);
  CHECK(z1.particles() == 2);
  CHECK(std::abs(z1.amplitudes()(1) - 1.0) < kTol);

  const auto phi0 = tensor(phi, zero);
  CHECK(std::abs(phi0.amplitudes()(0) - kHalfRoot) < kTol);
  CHECK(std::abs(phi0.amplitudes()(6) - kHalfRoot) < kTol);
  CHECK(std::abs(phi0.amplitudes().norm() - 1.0) < kTol);

  const auto pp = tensor(plus, plus);
  for (Eigen::Index i = 0; i < 4; ++i) CHECK(std::abs(pp.amplitudes()(i) - 0.5) < kTol);

  std::vector<PureState> parts{zero, one, zero};
  CHECK(distance(tensor(std::span<const PureState>(parts)), PureState::basis(2, {0, 1, 0})) < kTol);

  CHECK_THROWS_KIND(tensor(zero, PureState::basis(3, {0})), ErrorKind::LevelMismatch);
}

TEST_CASE("inner product and fidelity") {
  const auto phi_plus = state_of(2, 2, {1.0, 0.0, 0.0, 1.0});
  const auto phi_minus = state_of(2, 2, {1.0, 0.0, 0.0, -1.0});
  const auto zz = PureState::basis(2, {0, 0});
  CHECK(std::abs(inner_product(zz, zz) - 1.0) < kTol);
  CHECK(std::abs(inner_product(phi_plus, phi_minus)) < kTol);
  CHECK(std::abs(inner_product(phi_plus, zz) - kHalfRoot) < kTol);
  // Conjugate-linear in the first argument.
  const auto i_zero = state_of(2, 1, {Complex(0.0, 1.0), 0.0});
  CHECK(std::abs(inner_product(i_zero, PureState::basis(2, {0})) - Complex(0.0, -1.0)) < kTol);
  CHECK_THROWS_KIND(inner_product(zz, PureState::basis(2, {0})), ErrorKind::ShapeMismatch);
}

TEST_CASE("equality up to global phase") {
  const auto phi_plus = state_of(2, 2, {1.0, 0.0, 0.0, 1.0});
  const auto phi_minus = state_of(2, 2, {1.0, 0.0, 0.0, -1.0});
  const auto neg = state_of(2, 2, {-1.0, 0.0, 0.0, -1.0});
  CHECK(equal_up_to_global_phase(phi_plus, neg, kNormTolerance));
  CHECK_FALSE(equal_up_to_global_phase(phi_plus, phi_minus, kNormTolerance));
  std::mt19937_64 rng(3);
  const auto psi = random_state(rng, 3, 2);
  const PureState rotated(3, 2, psi.amplitudes() * std::polar(1.0, std::numbers::pi / 3));
  CHECK(equal_up_to_global_phase(psi, rotated, kNormTolerance));
}

TEST_CASE("permute") {
  const auto state = PureState::basis(3, {0, 1, 2});
  const std::vector<int> order{2, 0, 1};
  CHECK(distance(permute(state, order), PureState::basis(3, {2, 0, 1})) < kTol);
  std::mt19937_64 rng(5);
  const auto psi = random_state(rng, 2, 4);
  const std::vector<int> forward{3, 1, 0, 2};
  std::vector<int> inverse(4);
  for (int i = 0; i < 4; ++i) inverse[static_cast<std::size_t>(forward[static_cast<std::size_t>(i)])] = i;
  CHECK(distance(permute(permute(psi, forward), inverse), psi) < kTol);
  CHECK_THROWS_KIND(permute(psi, std::vector<int>{0, 0, 1, 2}), ErrorKind::BadSubset);
}

TEST_CASE("partial trace") {
  const auto phi = state_of(2, 2, {1.0, 0.0, 0.0, 1.0});
  const auto rho = partial_trace(phi, ParticleSet{1});
  CHECK((rho.entries() - Eigen::Matrix2cd::Identity() / 2.0).cwiseAbs().maxCoeff() < kTol);

  const auto rho2 = partial_trace(PureState::basis(2, {0, 1}), ParticleSet{2});
  CHECK(std::abs(rho2(1, 1) - 1.0) < kTol);
  CHECK(std::abs(rho2(0, 0)) < kTol);

  // sum_l eta_l e^{i theta_l} |ll> traces to diag(eta^2).
  const std::vector<double> eta{0.6, 0.0, 0.8};
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(9);
  for (int l = 0; l < 3; ++l) v(4 * l) = std::polar(eta[static_cast<std::size_t>(l)], 0.7 * l);
  const auto marginal = partial_trace(PureState(3, 2, v), ParticleSet{2});
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double want = i == j ? eta[static_cast<std::size_t>(i)] * eta[static_cast<std::size_t>(i)] : 0.0;
      CHECK(std::abs(marginal(i, j) - want) < kTol);
    }
  }
}

TEST_CASE("partial trace properties") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 2 + trial % 3;
    const auto a = random_state(rng, d, 2);
    const auto b = random_state(rng, d, 1);
    const auto joint = tensor(a, b);
    const auto kept = partial_trace(joint, ParticleSet{1, 2});
    const Eigen::MatrixXcd direct = a.amplitudes() * a.amplitudes().adjoint();
    CHECK((kept.entries() - direct).cwiseAbs().maxCoeff() < 1e-12);

    const auto psi = random_state(rng, d, 3);
    const auto rho = partial_trace(psi, ParticleSet{1, 3});
    CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
    CHECK(rho.is_hermitian());
    CHECK(rho.min_eigenvalue() > -kPsdTolerance);
    CHECK(rho.is_valid());
  }
  CHECK_THROWS_KIND(partial_trace(random_state(rng, 2, 2), ParticleSet{3}), ErrorKind::BadSubset);
}

TEST_CASE("project") {
  const auto phi = state_of(2, 2, {1.0, 0.0, 0.0, 1.0});
  const auto two = tensor(phi, phi);
  const auto p = project(two, ParticleSet{1, 3}, phi);
  CHECK(std::abs(p.probability - 0.25) < kTol);
  CHECK(distance(p.remainder, phi) < kTol);

  const auto zz = PureState::basis(2, {0, 0});
  const auto q = project(zz, ParticleSet{1}, PureState::basis(2, {0}));
  CHECK(std::abs(q.probability - 1.0) < kTol);
  CHECK(distance(q.remainder, PureState::basis(2, {0})) < kTol);

  CHECK_THROWS_KIND(project(zz, ParticleSet{1}, PureState::basis(2, {1})), ErrorKind::ZeroProbabilityOutcome);
  CHECK_THROWS_KIND(project(zz, ParticleSet{1}, PureState::basis(3, {0})), ErrorKind::LevelMismatch);
  CHECK_THROWS_KIND(project(zz, ParticleSet{1}, zz), ErrorKind::ShapeMismatch);
  CHECK_THROWS_KIND(project(zz, ParticleSet{1, 2}, zz), ErrorKind::BadSubset);
  CHECK_THROWS_KIND(project(zz, ParticleSet{3}, PureState::basis(2, {0})), ErrorKind::BadSubset);
}

TEST_CASE("project conserves probability over a complete basis") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 2 + trial % 2;
    const auto psi = random_state(rng, d, 3);
    const ParticleSet measured{1 + trial % 3};
    double total = 0.0;
    for (int digit = 0; digit < d; ++digit) total += project(psi, measured, PureState::basis(d, {digit})).probability;
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("split amplitudes") {
  const auto state = PureState::basis(2, {1, 0, 1});
  const auto blocks = split_amplitudes(state, ParticleSet{2});
  CHECK(blocks.rows() == 2);
  CHECK(blocks.cols() == 4);
  // Row: particle 2 digit 0; column: particles (1,3) digits (1,1) = index 3.
  CHECK(std::abs(blocks(0, 3) - 1.0) < kTol);
}

TEST_CASE("single precision instantiation") {
  using StateF = BasicPureState<float>;
  Eigen::VectorXcf v(2);
  v << 1.0f, 1.0f;
  const StateF plus(2, 1, v);
  const auto both = tensor(plus, plus);
  CHECK(std::abs(both.amplitudes()(3) - std::complex<float>(0.5f)) < 1e-6f);
  CHECK(std::abs(fidelity(both, both) - 1.0f) < 1e-6f);
}
