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
 * @file states.hpp
 * Named state families and measurement bases.
 *
 * Two-level cat, GHZ and Bell states share one label format, "G+(0011)":
 * the sign and the full bit string of the first branch, which always starts
 * with 0. A Bell state is the n = 2 case, e.g. phi+ = "G+(00)", psi- = "G-(01)".
 * d-level maximally entangled states are labelled "phi(u1,...,um)" and
 * computational basis states "z(a1,...,an)".
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmask/qudit.hpp"

namespace qmask {

/// Reduces x into [0, d).
inline int mod(long long x, int d) {
  const long long r = x % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

/// zeta^power with zeta = exp(2 pi i / d).
Complex root_of_unity(int d, long long power);

/// (|0 a> + (-1)^lambda |1 a-bar>) / sqrt 2.
struct BellLabel {
  int lambda = 0;
  int a = 0;
  friend bool operator==(const BellLabel&, const BellLabel&) = default;
};

/// (|a> + (-1)^lambda |a-bar>) / sqrt 2 over m = bits.size() qubits.
struct CatLabel {
  std::vector<int> bits;
  int lambda = 0;

  int size() const { return static_cast<int>(bits.size()); }
  friend bool operator==(const CatLabel&, const CatLabel&) = default;
};

/**
 * GHZ basis member (|0 a_2..a_n> + sign |1 a-bar_2..a-bar_n>) / sqrt 2.
 * `index` duplicates the bits as sum_{i>=2} a_i 2^(n-i).
 */
struct GhzLabel {
  int sign = +1;
  std::vector<int> bits;  // a_2 .. a_n
  unsigned index = 0;

  GhzLabel() = default;
  GhzLabel(int sign_, std::vector<int> tail_bits);
  static GhzLabel from_index(int n, int sign, unsigned index);
  /// Canonical GHZ label of a cat state; the global phase dropped is (-1)^lambda when a_1 = 1.
  static GhzLabel from_cat(const CatLabel& cat);
  static GhzLabel from_bell(const BellLabel& bell);
  static GhzLabel parse(const std::string& text);

  int size() const { return static_cast<int>(bits.size()) + 1; }
  bool consistent() const;
  std::string to_string() const;
  friend bool operator==(const GhzLabel&, const GhzLabel&) = default;
};

/// (1/sqrt d) sum_l zeta^(l u_1) |l, l+u_2, ..., l+u_m>.
struct MaxEntLabel {
  int level = 2;
  std::vector<int> u;

  MaxEntLabel() = default;
  MaxEntLabel(int level_, std::vector<int> u_);  // entries reduced mod level
  int size() const { return static_cast<int>(u.size()); }
  std::string to_string() const;
  friend bool operator==(const MaxEntLabel&, const MaxEntLabel&) = default;
};

/// "G+(0110)" style label of (|bits> + sign |bits-bar>) after canonicalizing the first bit to 0.
std::string cat_label_string(int sign, const std::vector<int>& bits);
std::string computational_label(const std::vector<int>& digits);

PureState bell(const BellLabel& label);
PureState cat(const CatLabel& label);
PureState ghz(const GhzLabel& label);
PureState max_entangled(const MaxEntLabel& label);
/// (|bits> + sign |bits-bar>) normalized, any length >= 1.
PureState cat_superposition(int sign, const std::vector<int>& bits);

struct BasisMember {
  std::string label;
  PureState state;
};

/// Orthonormal complete basis over k particles of level d.
class BasisSet {
 public:
  BasisSet(int level, int particles, std::vector<BasisMember> members);

  int level() const { return level_; }
  int particles() const { return particles_; }
  const std::vector<BasisMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  const BasisMember* find(const std::string& label) const;

  /// Members as columns of a d^k x d^k matrix.
  Eigen::MatrixXcd as_matrix() const;
  /// max |<b_i|b_j> - delta_ij|.
  double gram_deviation() const;
  /// max entrywise |sum_i |b_i><b_i| - I|.
  double completeness_deviation() const;

 private:
  int level_;
  int particles_;
  std::vector<BasisMember> members_;
};

BasisSet ghz_basis(int n);
BasisSet bell_basis();
BasisSet max_entangled_basis(int level, int m);
BasisSet computational_basis(int level, int k);

/// Every basis member permuted by `order` (see qmask::permute).
BasisSet permuted(const BasisSet& basis, std::span<const int> order);

}  // namespace qmask
