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

#pragma once

#include <random>

#include <doctest.h>

#include "qmask/qudit.hpp"

namespace qmask::testing {

inline constexpr double kTol = 1e-12;

inline PureState state_of(int level, int particles, std::initializer_list<Complex> amplitudes) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(amplitudes.size()));
  Eigen::Index i = 0;
  for (const Complex& a : amplitudes) v(i++) = a;
  return PureState(level, particles, std::move(v));
}

inline PureState random_state(std::mt19937_64& rng, int level, int particles) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXcd v(static_cast<Eigen::Index>(checked_dimension(level, particles)));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(normal(rng), normal(rng));
  return PureState(level, particles, std::move(v));
}

inline double distance(const PureState& a, const PureState& b) { return (a.amplitudes() - b.amplitudes()).norm(); }

}  // namespace qmask::testing

#define CHECK_THROWS_KIND(expr, expected_kind)                         \
  do {                                                                 \
    bool qmask_thrown_ = false;                                        \
    try {                                                              \
      (void)(expr);                                                    \
    } catch (const ::qmask::Error& qmask_error_) {                     \
      qmask_thrown_ = true;                                            \
      CHECK(qmask_error_.kind() == (expected_kind));                   \
    }                                                                  \
    CHECK_MESSAGE(qmask_thrown_, "expected a qmask::Error: " #expr);   \
  } while (false)
