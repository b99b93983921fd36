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

#include "qmask/states.hpp"

#include <numbers>
#include <sstream>

namespace qmask {

namespace {

void require_bit(int value, const char* what) {
  if (value != 0 && value != 1) throw Error(ErrorKind::BadLabel, std::string(what) + " must be 0 or 1");
}

std::vector<int> complement(const std::vector<int>& bits) {
  std::vector<int> out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) out[i] = 1 - bits[i];
  return out;
}

}  // namespace

Complex root_of_unity(int d, long long power) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(power, d)) / static_cast<double>(d);
  return std::polar(1.0, angle);
}

GhzLabel::GhzLabel(int sign_, std::vector<int> tail_bits) : sign(sign_), bits(std::move(tail_bits)) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::BadLabel, "GHZ sign must be +1 or -1");
  index = 0;
  for (int b : bits) {
    require_bit(b, "GHZ bit");
    index = index * 2 + static_cast<unsigned>(b);
  }
}

GhzLabel GhzLabel::from_index(int n, int sign, unsigned index) {
  if (n < 1 || n > 31) throw Error(ErrorKind::BadLabel, "GHZ size out of range");
  if (index >= (1u << (n - 1))) throw Error(ErrorKind::BadLabel, "GHZ index out of range");
  std::vector<int> bits(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) bits[static_cast<std::size_t>(n - 2 - i)] = static_cast<int>((index >> i) & 1u);
  return GhzLabel(sign, std::move(bits));
}

GhzLabel GhzLabel::from_cat(const CatLabel& cat) {
  if (cat.bits.empty()) throw Error(ErrorKind::BadLabel, "empty cat label");
  require_bit(cat.lambda, "lambda");
  std::vector<int> bits = cat.bits;
  for (int b : bits) require_bit(b, "cat bit");
  if (bits.front() == 1) bits = complement(bits);
  return GhzLabel(cat.lambda == 0 ? 1 : -1, std::vector<int>(bits.begin() + 1, bits.end()));
}

GhzLabel GhzLabel::from_bell(const BellLabel& bell) {
  require_bit(bell.lambda, "lambda");
  require_bit(bell.a, "a");
  return GhzLabel(bell.lambda == 0 ? 1 : -1, {bell.a});
}

GhzLabel GhzLabel::parse(const std::string& text) {
  if (text.size() < 5 || text[0] != 'G' || (text[1] != '+' && text[1] != '-') || text[2] != '(' ||
      text.back() != ')' || text[3] != '0') {
    throw Error(ErrorKind::BadLabel, "not a GHZ label: " + text);
  }
  std::vector<int> bits;
  for (std::size_t i = 4; i + 1 < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') throw Error(ErrorKind::BadLabel, "not a GHZ label: " + text);
    bits.push_back(text[i] - '0');
  }
  return GhzLabel(text[1] == '+' ? 1 : -1, std::move(bits));
}

bool GhzLabel::consistent() const {
  unsigned expected = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) return false;
    expected = expected * 2 + static_cast<unsigned>(b);
  }
  return expected == index && (sign == 1 || sign == -1);
}

std::string GhzLabel::to_string() const {
  std::string out = sign > 0 ? "G+(0" : "G-(0";
  for (int b : bits) out += static_cast<char>('0' + b);
  out += ')';
  return out;
}

MaxEntLabel::MaxEntLabel(int level_, std::vector<int> u_) : level(level_), u(std::move(u_)) {
  if (level < 2) throw Error(ErrorKind::BadLabel, "level must be at least 2");
  if (u.empty()) throw Error(ErrorKind::BadLabel, "maximally entangled label needs at least one entry");
  for (int& x : u) x = mod(x, level);
}

std::string MaxEntLabel::to_string() const {
  std::ostringstream out;
  out << "phi(";
  for (std::size_t i = 0; i < u.size(); ++i) out << (i ? "," : "") << u[i];
  out << ')';
  return out.str();
}

std::string cat_label_string(int sign, const std::vector<int>& bits) {
  if (bits.empty()) throw Error(ErrorKind::BadLabel, "empty cat label");
  const std::vector<int> canonical = bits.front() == 0 ? bits : complement(bits);
  std::string out = sign > 0 ? "G+(" : "G-(";
  for (int b : canonical) out += static_cast<char>('0' + b);
  out += ')';
  return out;
}

std::string computational_label(const std::vector<int>& digits) {
  std::ostringstream out;
  out << "z(";
  for (std::size_t i = 0; i < digits.size(); ++i) out << (i ? "," : "") << digits[i];
  out << ')';
  return out.str();
}

PureState cat_superposition(int sign, const std::vector<int>& bits) {
  Ket ket(2, static_cast<int>(bits.size()));
  ket.add(bits, 1.0);
  ket.add(complement(bits), static_cast<double>(sign));
  return ket.normalized();
}

PureState bell(const BellLabel& label) {
  require_bit(label.lambda, "lambda");
  require_bit(label.a, "a");
  Ket ket(2, 2);
  ket.add({0, label.a}, 1.0);
  ket.add({1, 1 - label.a}, label.lambda ? -1.0 : 1.0);
  return ket.normalized();
}

PureState cat(const CatLabel& label) {
  if (label.size() < 2) throw Error(ErrorKind::BadLabel, "cat states need m >= 2");
  require_bit(label.lambda, "lambda");
  for (int b : label.bits) require_bit(b, "cat bit");
  return cat_superposition(label.lambda ? -1 : 1, label.bits);
}

PureState ghz(const GhzLabel& label) {
  if (!label.consistent()) throw Error(ErrorKind::BadLabel, "GHZ index disagrees with its bits");
  std::vector<int> bits{0};
  bits.insert(bits.end(), label.bits.begin(), label.bits.end());
  return cat_superposition(label.sign, bits);
}

PureState max_entangled(const MaxEntLabel& label) {
  const int d = label.level;
  const int m = label.size();
  if (m < 1) throw Error(ErrorKind::BadLabel, "maximally entangled label needs at least one entry");
  Ket ket(d, m);
  std::vector<int> digits(static_cast<std::size_t>(m));
  for (int l = 0; l < d; ++l) {
    digits[0] = l;
    for (int i = 1; i < m; ++i) digits[static_cast<std::size_t>(i)] = mod(l + label.u[static_cast<std::size_t>(i)], d);
    ket.add(digits, root_of_unity(d, static_cast<long long>(l) * label.u[0]));
  }
  return ket.normalized();
}

BasisSet::BasisSet(int level, int particles, std::vector<BasisMember> members)
    : level_(level), particles_(particles), members_(std::move(members)) {
  if (members_.size() != checked_dimension(level, particles)) {
    throw Error(ErrorKind::ShapeMismatch, "basis must have exactly d^k members");
  }
  for (const auto& m : members_) {
    if (m.state.level() != level || m.state.particles() != particles) {
      throw Error(ErrorKind::ShapeMismatch, "basis member " + m.label + " has the wrong shape");
    }
  }
}

const BasisMember* BasisSet::find(const std::string& label) const {
  for (const auto& m : members_) {
    if (m.label == label) return &m;
  }
  return nullptr;
}

Eigen::MatrixXcd BasisSet::as_matrix() const {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(members_.size()), static_cast<Eigen::Index>(members_.size()));
  for (std::size_t i = 0; i < members_.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = members_[i].state.amplitudes();
  return out;
}

double BasisSet::gram_deviation() const {
  const Eigen::MatrixXcd b = as_matrix();
  const Eigen::MatrixXcd gram = b.adjoint() * b;
  return (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

double BasisSet::completeness_deviation() const {
  const Eigen::MatrixXcd b = as_matrix();
  const Eigen::MatrixXcd sum = b * b.adjoint();
  return (sum - Eigen::MatrixXcd::Identity(sum.rows(), sum.cols())).cwiseAbs().maxCoeff();
}

BasisSet ghz_basis(int n) {
  if (n < 2) throw Error(ErrorKind::BadLabel, "GHZ basis needs n >= 2");
  checked_dimension(2, n);
  std::vector<BasisMember> members;
  const unsigned count = 1u << (n - 1);
  for (unsigned p = 0; p < count; ++p) {
    for (int sign : {+1, -1}) {
      const GhzLabel label = GhzLabel::from_index(n, sign, p);
      members.push_back({label.to_string(), ghz(label)});
    }
  }
  return BasisSet(2, n, std::move(members));
}

BasisSet bell_basis() { return ghz_basis(2); }

BasisSet max_entangled_basis(int level, int m) {
  if (m < 1) throw Error(ErrorKind::BadLabel, "basis needs m >= 1");
  const std::size_t count = checked_dimension(level, m);
  std::vector<BasisMember> members;
  members.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const MaxEntLabel label(level, index_to_digits(i, level, m));
    members.push_back({label.to_string(), max_entangled(label)});
  }
  return BasisSet(level, m, std::move(members));
}

BasisSet computational_basis(int level, int k) {
  const std::size_t count = checked_dimension(level, k);
  std::vector<BasisMember> members;
  members.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto digits = index_to_digits(i, level, k);
    members.push_back({computational_label(digits), PureState::basis(level, digits)});
  }
  return BasisSet(level, k, std::move(members));
}

BasisSet permuted(const BasisSet& basis, std::span<const int> order) {
  std::vector<BasisMember> members;
  members.reserve(basis.size());
  for (const auto& m : basis.members()) members.push_back({m.label, permute(m.state, order)});
  return BasisSet(basis.level(), basis.particles(), std::move(members));
}

}  // namespace qmask
