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

#include "qmask/masking.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qmask/states.hpp"

namespace qmask {

void PhaseAmplitudeInput::validate() const {
  if (eta.size() < 2) throw Error(ErrorKind::BadInput, "phase-amplitude input needs d >= 2");
  if (theta.size() != eta.size()) throw Error(ErrorKind::ShapeMismatch, "eta and theta differ in length");
  double total = 0.0;
  for (double e : eta) {
    if (!std::isfinite(e) || e < 0.0) throw Error(ErrorKind::BadInput, "eta entries must be finite and >= 0");
    total += e * e;
  }
  if (std::abs(total - 1.0) > kNormTolerance) throw Error(ErrorKind::BadInput, "sum eta^2 must be 1");
  for (double t : theta) {
    if (!std::isfinite(t) || t < -std::numbers::pi || t > std::numbers::pi) {
      throw Error(ErrorKind::BadInput, "theta entries must lie in [-pi, pi]");
    }
  }
}

PureState PhaseAmplitudeInput::ket() const {
  validate();
  Eigen::VectorXcd v(level());
  for (int l = 0; l < level(); ++l) v(l) = std::polar(eta[static_cast<std::size_t>(l)], theta[static_cast<std::size_t>(l)]);
  return PureState(level(), 1, std::move(v));
}

void QuditAmplitudes::validate() const {
  if (alpha.size() < 2) throw Error(ErrorKind::BadInput, "amplitude input needs d >= 2");
  double total = 0.0;
  for (const Complex& a : alpha) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) throw Error(ErrorKind::BadInput, "non-finite alpha");
    total += std::norm(a);
  }
  if (std::abs(total - 1.0) > kNormTolerance) throw Error(ErrorKind::BadInput, "sum |alpha|^2 must be 1");
}

PureState QuditAmplitudes::ket() const {
  validate();
  Eigen::VectorXcd v(level());
  for (int k = 0; k < level(); ++k) v(k) = alpha[static_cast<std::size_t>(k)];
  return PureState(level(), 1, std::move(v));
}

PureState mask_modi_qubit(int l) {
  if (l != 0 && l != 1) throw Error(ErrorKind::BadInput, "Modi qubit masker takes l in {0, 1}");
  Ket ket(2, 2);
  ket.add({0, 0}, 1.0);
  ket.add({1, 1}, l ? -1.0 : 1.0);
  return ket.normalized();
}

PureState mask_modi_qudit(const PhaseAmplitudeInput& input) {
  input.validate();
  const int d = input.level();
  Ket ket(d, 2);
  for (int l = 0; l < d; ++l) {
    ket.add({l, l}, std::polar(input.eta[static_cast<std::size_t>(l)], input.theta[static_cast<std::size_t>(l)]));
  }
  return ket.normalized();
}

PureState mask_li_qubit(const QuditAmplitudes& input) {
  input.validate();
  if (input.level() != 2) throw Error(ErrorKind::LevelMismatch, "qubit masker takes a two-level input");
  const PureState psi0 = tensor(bell({0, 0}), bell({0, 0}));
  const PureState psi1 = tensor(bell({1, 0}), bell({1, 0}));
  Ket ket(2, 4, input.alpha[0] * psi0.amplitudes() + input.alpha[1] * psi1.amplitudes());
  return ket.normalized();
}

PureState mask_li_qudit(const QuditAmplitudes& input) {
  input.validate();
  const int d = input.level();
  const int particles = 2 * d;
  Ket ket(d, particles);
  // Each computational label is a sequence of d pairs; only labels whose pairs
  // are all diagonal (j, j) carry amplitude, with phase zeta^{k sum_h j_h}.
  const std::size_t pair_labels = checked_dimension(d, d);
  const double scale = std::pow(static_cast<double>(d), -0.5 * d);
  std::vector<int> digits(static_cast<std::size_t>(particles));
  for (std::size_t i = 0; i < pair_labels; ++i) {
    const auto js = index_to_digits(i, d, d);
    long long omega = 0;
    for (int h = 0; h < d; ++h) {
      digits[static_cast<std::size_t>(2 * h)] = js[static_cast<std::size_t>(h)];
      digits[static_cast<std::size_t>(2 * h + 1)] = js[static_cast<std::size_t>(h)];
      omega += js[static_cast<std::size_t>(h)];
    }
    Complex amplitude = 0.0;
    for (int k = 0; k < d; ++k) amplitude += input.alpha[static_cast<std::size_t>(k)] * root_of_unity(d, omega * k);
    ket.add(digits, scale * amplitude);
  }
  return ket.normalized();
}

std::vector<ParticleSet> single_particle_subsystems(int particles) {
  std::vector<ParticleSet> out;
  for (int p = 1; p <= particles; ++p) out.push_back(ParticleSet{p});
  return out;
}

MaskingReport verify_masking(std::span<const PureState> family, std::span<const ParticleSet> subsystems,
                             double tol) {
  if (family.empty()) throw Error(ErrorKind::BadInput, "masking check needs at least one state");
  for (const auto& member : family) require_same_shape(family.front(), member);

  MaskingReport report;
  report.tolerance = tol;
  for (const auto& subsystem : subsystems) {
    SubsystemMarginals entry{subsystem, {}, 0.0};
    for (const auto& member : family) entry.marginals.push_back(partial_trace(member, subsystem));
    for (const auto& rho : entry.marginals) {
      entry.max_deviation = std::max(entry.max_deviation, rho.max_deviation(entry.marginals.front()));
    }
    report.max_deviation = std::max(report.max_deviation, entry.max_deviation);
    report.subsystems.push_back(std::move(entry));
  }
  for (std::size_t i = 0; i < report.subsystems.size(); ++i) {
    for (std::size_t j = i + 1; j < report.subsystems.size(); ++j) {
      const auto& a = report.subsystems[i];
      const auto& b = report.subsystems[j];
      if (a.subsystem.size() != b.subsystem.size()) continue;
      const double dev = a.marginals.front().max_deviation(b.marginals.front());
      report.cross_deviation = std::max(report.cross_deviation.value_or(0.0), dev);
    }
  }
  report.verdict = report.max_deviation <= tol;
  return report;
}

}  // namespace qmask
