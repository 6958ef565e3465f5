// Copyright 2026 The netsteer Authors
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

#include "netsteer/measurements.hpp"

#include <algorithm>
#include <cmath>

#include "netsteer/errors.hpp"

namespace netsteer {

Bitstring::Bitstring(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_)
    if (b > 1) throw RangeError("bitstring entries must be 0 or 1");
}

Bitstring Bitstring::from_index(std::size_t index, std::size_t n) {
  if (n < 64 && index >> n != 0)
    throw RangeError("outcome index " + std::to_string(index) + " does not fit in " +
                     std::to_string(n) + " bits");
  std::vector<std::uint8_t> bits(n);
  for (std::size_t k = 0; k < n; ++k) bits[k] = (index >> (n - 1 - k)) & 1u;
  return Bitstring(std::move(bits));
}

Bitstring Bitstring::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  for (char ch : text) {
    if (ch != '0' && ch != '1')
      throw RangeError("bitstring \"" + std::string(text) + "\" may only contain 0 and 1");
    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return Bitstring(std::move(bits));
}

std::size_t Bitstring::to_index() const noexcept {
  std::size_t index = 0;
  for (auto b : bits_) index = (index << 1) | b;
  return index;
}

Bitstring Bitstring::complement() const {
  std::vector<std::uint8_t> bits(bits_);
  for (auto& b : bits) b ^= 1u;
  return Bitstring(std::move(bits));
}

std::string Bitstring::str() const {
  std::string s;
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

SettingString::SettingString(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw InvalidSettingError("setting string is empty");
  const bool in_c = std::all_of(indices_.begin(), indices_.end(),
                                [](int i) { return i == 1 || i == 2; });
  const bool in_c_prime = std::all_of(indices_.begin(), indices_.end(),
                                      [](int i) { return i == 0 || i == 3; });
  if (in_c && count(2) % 2 == 0) {
    class_ = SettingClass::C;
  } else if (in_c_prime && count(3) > 0 && count(3) % 2 == 0) {
    class_ = SettingClass::Cprime;
  } else {
    std::string s;
    for (int i : indices_) s += std::to_string(i);
    throw InvalidSettingError(
        "setting string \"" + s +
        "\" needs {1,2} with an even number of 2s, or {0,3} with an even nonzero number of 3s");
  }
}

SettingString SettingString::parse(std::string_view text) {
  std::vector<int> indices;
  for (char ch : text) {
    if (ch < '0' || ch > '3')
      throw InvalidSettingError("setting string \"" + std::string(text) +
                                "\" may only contain the digits 0-3");
    indices.push_back(ch - '0');
  }
  return SettingString(std::move(indices));
}

SettingString SettingString::diagonal(int setting, std::size_t n) {
  return SettingString(std::vector<int>(n, setting));
}

std::size_t SettingString::count(int value) const noexcept {
  return static_cast<std::size_t>(std::count(indices_.begin(), indices_.end(), value));
}

std::string SettingString::str() const {
  std::string s;
  for (int i : indices_) s.push_back(static_cast<char>('0' + i));
  return s;
}

IndexSets index_sets(std::size_t n) {
  if (n < 2) throw RangeError("index sets need n >= 2");
  if (n > 30) throw SizeLimitError("index sets are enumerated for n <= 30");
  IndexSets sets;
  const std::size_t total = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < total; ++mask) {
    // Bit k of the mask (MSB = position 0) selects the "second" symbol.
    std::vector<int> c_digits(n);
    std::vector<int> cp_digits(n);
    std::size_t ones = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const bool bit = (mask >> (n - 1 - k)) & 1u;
      ones += bit;
      c_digits[k] = bit ? 2 : 1;
      cp_digits[k] = bit ? 0 : 3;
    }
    if (ones % 2 == 0) sets.c.emplace_back(std::move(c_digits));
    const std::size_t threes = n - ones;
    if (threes > 0 && threes % 2 == 0) sets.c_prime.emplace_back(std::move(cp_digits));
  }
  return sets;
}

MubTriple MubTriple::pauli() {
  return MubTriple({pauli::identity(), pauli::x(), pauli::y(), pauli::z()});
}

MubTriple MubTriple::rotated(const ComplexMatrix& unitary) {
  if (unitary.dim() != 2) throw DimensionError("MUB rotation must be a 2x2 unitary");
  if ((unitary * unitary.adjoint()).max_abs_diff(ComplexMatrix::identity(2)) > kStateTolerance)
    throw RangeError("MUB rotation is not unitary within 1e-10");
  const ComplexMatrix u_dag = unitary.adjoint();
  return MubTriple({pauli::identity(), unitary * pauli::x() * u_dag,
                    unitary * pauli::y() * u_dag, unitary * pauli::z() * u_dag});
}

const ComplexMatrix& MubTriple::observable(int setting) const {
  if (setting < 0 || setting > 3)
    throw InvalidSettingError("edge setting must be 0..3, got " + std::to_string(setting));
  return obs_[static_cast<std::size_t>(setting)];
}

ComplexMatrix MubTriple::projector(int setting, int outcome) const {
  if (outcome != 0 && outcome != 1)
    throw RangeError("edge outcome must be 0 or 1, got " + std::to_string(outcome));
  if (setting == 0) return outcome == 0 ? pauli::identity() : ComplexMatrix(2);
  const double sign = outcome == 0 ? 1.0 : -1.0;
  ComplexMatrix p = pauli::identity() + Complex(sign) * observable(setting);
  p *= 0.5;
  return p;
}

bool MubTriple::is_pauli() const {
  for (int k = 1; k <= 3; ++k)
    if (obs_[k].max_abs_diff(pauli::by_index(k)) > 1e-12) return false;
  return true;
}

FixedMeasurement::FixedMeasurement(std::size_t n, std::vector<ComplexMatrix> projectors)
    : n_(n), projectors_(std::move(projectors)) {
  if (projectors_.size() != (std::size_t{1} << n))
    throw DimensionError("fixed measurement on " + std::to_string(n) + " qubits needs " +
                         std::to_string(std::size_t{1} << n) + " projectors");
  for (const auto& p : projectors_)
    if (p.dim() != (std::size_t{1} << n))
      throw DimensionError("fixed measurement projector has the wrong dimension");
}

const ComplexMatrix& FixedMeasurement::projector(const Bitstring& b) const {
  if (b.size() != n_)
    throw DimensionError("outcome " + b.str() + " has the wrong length for n = " +
                         std::to_string(n_));
  return projectors_[b.to_index()];
}

FixedMeasurement ghz_projectors(std::size_t n) {
  if (n < 1 || n > kMaxCentralQubits)
    throw SizeLimitError("GHZ projectors are built for 1 <= n <= " +
                         std::to_string(kMaxCentralQubits) + ", got " + std::to_string(n));
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t all_ones = dim - 1;
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<ComplexMatrix> projectors(dim, ComplexMatrix(dim));
  // t ranges over labels with t_1 = 0, i.e. the top half of the index range.
  for (std::size_t t = 0; t < dim / 2; ++t) {
    const std::size_t t_bar = t ^ all_ones;
    std::vector<Complex> plus(dim, 0.0);
    std::vector<Complex> minus(dim, 0.0);
    plus[t] = s;
    plus[t_bar] = s;
    minus[t] = s;
    minus[t_bar] = -s;
    projectors[t] = ComplexMatrix::outer(plus);
    projectors[t_bar] = ComplexMatrix::outer(minus);
  }
  return FixedMeasurement(n, std::move(projectors));
}

namespace {

int parity(std::size_t v) { return static_cast<int>(__builtin_popcountll(v) & 1); }

// Bitmask (MSB = position 0) of positions where s has the given value.
std::size_t positions_of(const SettingString& s, int value) {
  std::size_t mask = 0;
  const std::size_t n = s.size();
  for (std::size_t k = 0; k < n; ++k)
    if (s[k] == value) mask |= std::size_t{1} << (n - 1 - k);
  return mask;
}

}  // namespace

ComplexMatrix y_operator(const FixedMeasurement& meas, const SettingString& s) {
  const std::size_t n = meas.n();
  if (s.size() != n)
    throw InvalidSettingError("setting string " + s.str() + " does not have length " +
                              std::to_string(n));
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t all_ones = dim - 1;
  // For class C, I = (i_k - 1) is 1 exactly where i_k = 2. For C', I_0 . T is
  // 3 * (number of 3-slots with t_k = 1), whose parity only sees the 3s.
  const bool is_c = s.setting_class() == SettingClass::C;
  const std::size_t weight = is_c ? positions_of(s, 2) : positions_of(s, 3);
  ComplexMatrix y(dim);
  for (std::size_t t = 0; t < dim / 2; ++t) {
    const double sign = parity(weight & t) ? -1.0 : 1.0;
    const ComplexMatrix& g = meas.projector(t);
    const ComplexMatrix& g_bar = meas.projector(t ^ all_ones);
    if (is_c) {
      y += Complex(sign) * (g - g_bar);
    } else {
      y += Complex(sign) * (g + g_bar);
    }
  }
  return y;
}

ComplexMatrix y_operator(std::size_t n, const SettingString& s) {
  return y_operator(ghz_projectors(n), s);
}

PauliForm y_pauli_form(const SettingString& s) {
  PauliForm form{1, std::vector<int>(s.size())};
  if (s.setting_class() == SettingClass::C) {
    const std::size_t m = s.count(2);
    form.sign = (m / 2) % 2 == 0 ? 1 : -1;
    for (std::size_t k = 0; k < s.size(); ++k) form.paulis[k] = s[k] == 1 ? 1 : 2;
  } else {
    for (std::size_t k = 0; k < s.size(); ++k) form.paulis[k] = s[k] == 3 ? 3 : 0;
  }
  return form;
}

ComplexMatrix pauli_string(const std::vector<int>& paulis) {
  std::vector<ComplexMatrix> factors;
  factors.reserve(paulis.size());
  for (int p : paulis) factors.push_back(pauli::by_index(p));
  return kron_all(factors);
}

int sign_exponent(std::size_t n, const SettingString& s, const Bitstring& b) {
  if (s.size() != n || b.size() != n)
    throw DimensionError("sign_exponent: setting and outcome must both have length " +
                         std::to_string(n));
  const Bitstring delta = b[0] == 0 ? b : b.complement();
  const std::size_t d = delta.to_index();
  if (s.setting_class() == SettingClass::C) {
    // I . Delta + b_1 with I_k = i_k - 1.
    return (parity(positions_of(s, 2) & d) + b[0]) % 2;
  }
  // I_0 . Delta with I_0 = i_k in {0, 3}; 3 is odd.
  return parity(positions_of(s, 3) & d);
}

}  // namespace netsteer
