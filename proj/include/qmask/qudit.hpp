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
 * @file qudit.hpp
 * Dense state vectors over n qudits of level d.
 *
 * Basis label (a_1, ..., a_n) lives at flat index sum_i a_i * d^(n-i), so
 * particle 1 is the most significant digit. Particle positions in the public
 * API are 1-based; permutation vectors are 0-based.
 */
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qmask/error.hpp"

namespace qmask {

inline constexpr std::size_t kMaxDimension = std::size_t{1} << 22;
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kPsdTolerance = 1e-7;
inline constexpr double kZeroProbability = 1e-12;

/// d^n, rejecting shapes beyond kMaxDimension.
inline std::size_t checked_dimension(int level, int particles) {
  if (level < 2) {
    throw Error(ErrorKind::ShapeMismatch, "level must be at least 2, got " + std::to_string(level));
  }
  if (particles < 0) {
    throw Error(ErrorKind::ShapeMismatch, "negative particle count");
  }
  std::size_t dim = 1;
  for (int i = 0; i < particles; ++i) {
    dim *= static_cast<std::size_t>(level);
    if (dim > kMaxDimension) {
      throw Error(ErrorKind::DimensionTooLarge, std::to_string(level) + "^" + std::to_string(particles) +
                                                    " exceeds the 2^22 dimension cap");
    }
  }
  return dim;
}

inline std::vector<int> index_to_digits(std::size_t index, int level, int particles) {
  std::vector<int> digits(static_cast<std::size_t>(particles), 0);
  for (int p = particles - 1; p >= 0; --p) {
    digits[static_cast<std::size_t>(p)] = static_cast<int>(index % static_cast<std::size_t>(level));
    index /= static_cast<std::size_t>(level);
  }
  return digits;
}

inline std::size_t digits_to_index(std::span<const int> digits, int level) {
  std::size_t index = 0;
  for (int digit : digits) {
    if (digit < 0 || digit >= level) {
      throw Error(ErrorKind::BadLabel, "digit " + std::to_string(digit) + " out of range for level " +
                                           std::to_string(level));
    }
    index = index * static_cast<std::size_t>(level) + static_cast<std::size_t>(digit);
  }
  return index;
}

/// Distinct 1-based particle positions, kept in increasing order.
class ParticleSet {
 public:
  ParticleSet() = default;
  ParticleSet(std::initializer_list<int> positions) : ParticleSet(std::vector<int>(positions)) {}
  explicit ParticleSet(std::vector<int> positions) : positions_(std::move(positions)) {
    std::sort(positions_.begin(), positions_.end());
    if (std::adjacent_find(positions_.begin(), positions_.end()) != positions_.end()) {
      throw Error(ErrorKind::BadSubset, "duplicate particle position");
    }
    if (!positions_.empty() && positions_.front() < 1) {
      throw Error(ErrorKind::BadSubset, "particle positions are 1-based");
    }
  }

  /// Positions first..last inclusive.
  static ParticleSet range(int first, int last) {
    std::vector<int> positions;
    for (int p = first; p <= last; ++p) positions.push_back(p);
    return ParticleSet(std::move(positions));
  }

  std::span<const int> positions() const { return positions_; }
  std::size_t size() const { return positions_.size(); }
  bool empty() const { return positions_.empty(); }
  auto begin() const { return positions_.begin(); }
  auto end() const { return positions_.end(); }
  int operator[](std::size_t i) const { return positions_[i]; }

  bool contains(int position) const {
    return std::binary_search(positions_.begin(), positions_.end(), position);
  }

  void check_within(int particles) const {
    if (!positions_.empty() && positions_.back() > particles) {
      throw Error(ErrorKind::BadSubset, "position " + std::to_string(positions_.back()) +
                                            " outside a " + std::to_string(particles) + "-particle state");
    }
  }

  ParticleSet complement(int particles) const {
    check_within(particles);
    std::vector<int> rest;
    for (int p = 1; p <= particles; ++p) {
      if (!contains(p)) rest.push_back(p);
    }
    return ParticleSet(std::move(rest));
  }

  friend bool operator==(const ParticleSet&, const ParticleSet&) = default;

 private:
  std::vector<int> positions_;
};

template <typename Real>
class BasicPureState;

/// Unnormalized amplitude vector. Cannot be measured; normalize first.
template <typename Real>
class BasicKet {
 public:
  using RealScalar = Real;
  using Scalar = std::complex<Real>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BasicKet(int level, int particles)
      : level_(level),
        particles_(particles),
        amplitudes_(Vector::Zero(static_cast<Eigen::Index>(checked_dimension(level, particles)))) {}

  BasicKet(int level, int particles, Vector amplitudes)
      : level_(level), particles_(particles), amplitudes_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amplitudes_.size()) != checked_dimension(level, particles)) {
      throw Error(ErrorKind::ShapeMismatch, "amplitude count does not match level^particles");
    }
  }

  int level() const { return level_; }
  int particles() const { return particles_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Vector& amplitudes() { return amplitudes_; }

  void add(std::span<const int> digits, Scalar value) {
    if (digits.size() != static_cast<std::size_t>(particles_)) {
      throw Error(ErrorKind::ShapeMismatch, "label length differs from particle count");
    }
    amplitudes_(static_cast<Eigen::Index>(digits_to_index(digits, level_))) += value;
  }
  void add(std::initializer_list<int> digits, Scalar value) {
    add(std::span<const int>(digits.begin(), digits.size()), value);
  }

  Real norm() const { return amplitudes_.norm(); }

  BasicPureState<Real> normalized() const { return BasicPureState<Real>(level_, particles_, amplitudes_); }

 private:
  int level_;
  int particles_;
  Vector amplitudes_;
};

/// Normalized state vector. The constructor rescales to unit norm.
template <typename Real>
class BasicPureState {
 public:
  using RealScalar = Real;
  using Scalar = std::complex<Real>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  BasicPureState(int level, int particles, Vector amplitudes)
      : level_(level), particles_(particles), amplitudes_(std::move(amplitudes)) {
    if (particles < 1) {
      throw Error(ErrorKind::ShapeMismatch, "a state needs at least one particle");
    }
    if (static_cast<std::size_t>(amplitudes_.size()) != checked_dimension(level, particles)) {
      throw Error(ErrorKind::ShapeMismatch, "amplitude count does not match level^particles");
    }
    if (!amplitudes_.allFinite()) {
      throw Error(ErrorKind::BadInput, "non-finite amplitude");
    }
    const Real norm = amplitudes_.norm();
    if (!(norm > Real(kZeroProbability))) {
      throw Error(ErrorKind::BadInput, "cannot normalize a zero vector");
    }
    amplitudes_ /= norm;
  }

  explicit BasicPureState(const BasicKet<Real>& ket)
      : BasicPureState(ket.level(), ket.particles(), ket.amplitudes()) {}

  /// Computational basis state |digits>.
  static BasicPureState basis(int level, std::span<const int> digits) {
    const int particles = static_cast<int>(digits.size());
    Vector amplitudes = Vector::Zero(static_cast<Eigen::Index>(checked_dimension(level, particles)));
    amplitudes(static_cast<Eigen::Index>(digits_to_index(digits, level))) = Scalar(1);
    return BasicPureState(level, particles, std::move(amplitudes));
  }
  static BasicPureState basis(int level, std::initializer_list<int> digits) {
    return basis(level, std::span<const int>(digits.begin(), digits.size()));
  }

  int level() const { return level_; }
  int particles() const { return particles_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }

  Scalar amplitude(std::span<const int> digits) const {
    return amplitudes_(static_cast<Eigen::Index>(digits_to_index(digits, level_)));
  }

  BasicKet<Real> ket() const { return BasicKet<Real>(level_, particles_, amplitudes_); }

 private:
  int level_;
  int particles_;
  Vector amplitudes_;
};

/// Reduced state of a particle subset.
template <typename Real>
class BasicDensityMatrix {
 public:
  using Scalar = std::complex<Real>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  BasicDensityMatrix(int level, int particles, Matrix entries)
      : level_(level), particles_(particles), entries_(std::move(entries)) {
    const auto dim = static_cast<Eigen::Index>(checked_dimension(level, particles));
    if (entries_.rows() != dim || entries_.cols() != dim) {
      throw Error(ErrorKind::ShapeMismatch, "density matrix must be d^k x d^k");
    }
  }

  int level() const { return level_; }
  int particles() const { return particles_; }
  const Matrix& entries() const { return entries_; }
  Scalar operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }

  Scalar trace() const { return entries_.trace(); }

  bool is_hermitian(Real tol = Real(kNormTolerance)) const {
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
  }

  Real min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
  }

  bool is_valid() const {
    return is_hermitian() && std::abs(trace() - Scalar(1)) <= Real(kNormTolerance) &&
           min_eigenvalue() >= -Real(kPsdTolerance);
  }

  /// Largest entrywise |this - other|.
  Real max_deviation(const BasicDensityMatrix& other) const {
    if (other.level_ != level_ || other.particles_ != particles_) {
      throw Error(ErrorKind::ShapeMismatch, "density matrices differ in shape");
    }
    return (entries_ - other.entries_).cwiseAbs().maxCoeff();
  }

  Real max_deviation(const Matrix& other) const { return (entries_ - other).cwiseAbs().maxCoeff(); }

 private:
  int level_;
  int particles_;
  Matrix entries_;
};

using Ket = BasicKet<double>;
using PureState = BasicPureState<double>;
using DensityMatrix = BasicDensityMatrix<double>;
using Complex = std::complex<double>;

template <typename Real>
void require_same_shape(const BasicPureState<Real>& a, const BasicPureState<Real>& b) {
  if (a.level() != b.level()) throw Error(ErrorKind::LevelMismatch, "states differ in level");
  if (a.particles() != b.particles()) throw Error(ErrorKind::ShapeMismatch, "states differ in particle count");
}

template <typename Real>
BasicPureState<Real> tensor(std::span<const BasicPureState<Real>> parts) {
  if (parts.empty()) throw Error(ErrorKind::ShapeMismatch, "tensor of nothing");
  const int level = parts.front().level();
  int particles = 0;
  for (const auto& part : parts) {
    if (part.level() != level) throw Error(ErrorKind::LevelMismatch, "tensor factors differ in level");
    particles += part.particles();
  }
  checked_dimension(level, particles);
  using Vector = typename BasicPureState<Real>::Vector;
  Vector acc = parts.front().amplitudes();
  for (std::size_t f = 1; f < parts.size(); ++f) {
    const Vector& rhs = parts[f].amplitudes();
    Vector next(acc.size() * rhs.size());
    for (Eigen::Index i = 0; i < acc.size(); ++i) {
      next.segment(i * rhs.size(), rhs.size()) = acc(i) * rhs;
    }
    acc = std::move(next);
  }
  return BasicPureState<Real>(level, particles, std::move(acc));
}

template <typename Real>
BasicPureState<Real> tensor(const BasicPureState<Real>& a, const BasicPureState<Real>& b) {
  const BasicPureState<Real> parts[] = {a, b};
  return tensor(std::span<const BasicPureState<Real>>(parts));
}

/// <a|b>, conjugate-linear in a.
template <typename Real>
std::complex<Real> inner_product(const BasicPureState<Real>& a, const BasicPureState<Real>& b) {
  require_same_shape(a, b);
  return a.amplitudes().dot(b.amplitudes());
}

template <typename Real>
Real fidelity(const BasicPureState<Real>& a, const BasicPureState<Real>& b) {
  return std::abs(inner_product(a, b));
}

template <typename Real>
bool equal_up_to_global_phase(const BasicPureState<Real>& a, const BasicPureState<Real>& b, Real tol) {
  return fidelity(a, b) >= Real(1) - tol;
}

/// Reorders particles: particle i of the result is particle order[i] of the input (0-based).
template <typename Real>
BasicPureState<Real> permute(const BasicPureState<Real>& state, std::span<const int> order) {
  const int n = state.particles();
  const int d = state.level();
  if (order.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::ShapeMismatch, "permutation length differs from particle count");
  }
  std::vector<int> seen(order.begin(), order.end());
  std::sort(seen.begin(), seen.end());
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)] != i) throw Error(ErrorKind::BadSubset, "not a permutation");
  }
  // Stride of input particle order[i] in the input index, placed at output digit i.
  std::vector<std::size_t> in_stride(static_cast<std::size_t>(n));
  std::size_t s = 1;
  for (int p = n - 1; p >= 0; --p) {
    in_stride[static_cast<std::size_t>(p)] = s;
    s *= static_cast<std::size_t>(d);
  }
  typename BasicPureState<Real>::Vector out(state.amplitudes().size());
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  std::size_t source = 0;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    out(i) = state.amplitudes()(static_cast<Eigen::Index>(source));
    for (int p = n - 1; p >= 0; --p) {
      const std::size_t stride = in_stride[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])];
      if (++digits[static_cast<std::size_t>(p)] < d) {
        source += stride;
        break;
      }
      digits[static_cast<std::size_t>(p)] = 0;
      source -= stride * static_cast<std::size_t>(d - 1);
    }
  }
  return BasicPureState<Real>(d, n, std::move(out));
}

/**
 * Reshapes the amplitudes into a matrix whose row index is the label of the
 * selected particles and whose column index is the label of the rest, both in
 * ascending particle order.
 */
template <typename Real>
Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> split_amplitudes(
    const BasicPureState<Real>& state, const ParticleSet& selected) {
  const int n = state.particles();
  const int d = state.level();
  if (selected.empty()) throw Error(ErrorKind::BadSubset, "empty particle set");
  selected.check_within(n);

  std::vector<std::size_t> stride(static_cast<std::size_t>(n));
  std::vector<char> in_rows(static_cast<std::size_t>(n));
  std::size_t rows = 1;
  std::size_t cols = 1;
  for (int p = n - 1; p >= 0; --p) {
    const bool row_digit = selected.contains(p + 1);
    in_rows[static_cast<std::size_t>(p)] = row_digit;
    std::size_t& extent = row_digit ? rows : cols;
    stride[static_cast<std::size_t>(p)] = extent;
    extent *= static_cast<std::size_t>(d);
  }

  Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic> out(rows, cols);
  std::vector<int> digits(static_cast<std::size_t>(n), 0);
  std::size_t row = 0;
  std::size_t col = 0;
  const auto& amps = state.amplitudes();
  for (Eigen::Index i = 0; i < amps.size(); ++i) {
    out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = amps(i);
    for (int p = n - 1; p >= 0; --p) {
      const auto up = static_cast<std::size_t>(p);
      std::size_t& index = in_rows[up] ? row : col;
      if (++digits[up] < d) {
        index += stride[up];
        break;
      }
      digits[up] = 0;
      index -= stride[up] * static_cast<std::size_t>(d - 1);
    }
  }
  return out;
}

/// Tr_rest |psi><psi|, the kept particles in ascending order.
template <typename Real>
BasicDensityMatrix<Real> partial_trace(const BasicPureState<Real>& state, const ParticleSet& keep) {
  const auto blocks = split_amplitudes(state, keep);
  return BasicDensityMatrix<Real>(state.level(), static_cast<int>(keep.size()), blocks * blocks.adjoint());
}

template <typename Real>
struct BasicProjection {
  Real probability;
  BasicPureState<Real> remainder;
};
using Projection = BasicProjection<double>;

/**
 * Projects the measured particles onto basis_vector (laid out over the
 * measured positions in ascending order). The remainder keeps the unmeasured
 * particles in ascending original order and is renormalized.
 */
template <typename Real>
BasicProjection<Real> project(const BasicPureState<Real>& state, const ParticleSet& measured,
                              const BasicPureState<Real>& basis_vector) {
  if (basis_vector.level() != state.level()) {
    throw Error(ErrorKind::LevelMismatch, "basis vector level differs from state level");
  }
  if (basis_vector.particles() != static_cast<int>(measured.size())) {
    throw Error(ErrorKind::ShapeMismatch, "basis vector size differs from measured particle count");
  }
  if (measured.size() >= static_cast<std::size_t>(state.particles())) {
    throw Error(ErrorKind::BadSubset, "at least one particle must remain unmeasured");
  }
  const auto blocks = split_amplitudes(state, measured);
  typename BasicPureState<Real>::Vector rest = blocks.transpose() * basis_vector.amplitudes().conjugate();
  const Real probability = rest.squaredNorm();
  if (probability < Real(kZeroProbability)) {
    throw Error(ErrorKind::ZeroProbabilityOutcome, "outcome has probability below 1e-12");
  }
  const int remaining = state.particles() - static_cast<int>(measured.size());
  return {probability, BasicPureState<Real>(state.level(), remaining, std::move(rest))};
}

}  // namespace qmask
