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

#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "netsteer/matrix.hpp"

namespace netsteer {

/// Largest central-party size for which GHZ projectors are built.
inline constexpr std::size_t kMaxCentralQubits = 6;

/// Outcome label b = b_1 ... b_n. The integer form is big-endian: b_1 is the
/// most significant bit, so "011" <-> 3.
class Bitstring {
 public:
  Bitstring() = default;
  explicit Bitstring(std::vector<std::uint8_t> bits);

  static Bitstring from_index(std::size_t index, std::size_t n);
  static Bitstring parse(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t operator[](std::size_t k) const { return bits_[k]; }
  std::size_t to_index() const noexcept;
  Bitstring complement() const;
  std::string str() const;

  auto operator<=>(const Bitstring&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

enum class SettingClass { C, Cprime };

/// Edge-party setting string i_1 ... i_n. Class C strings use {1, 2} with an
/// even number of 2s; class C' strings use {0, 3} with an even, nonzero number
/// of 3s. 0 means the identity observable.
class SettingString {
 public:
  /// Throws InvalidSettingError when the string fits neither class.
  explicit SettingString(std::vector<int> indices);
  static SettingString parse(std::string_view text);
  /// (i, i, ..., i). Valid for i = 1, and for i = 2, 3 when n is even.
  static SettingString diagonal(int setting, std::size_t n);

  std::size_t size() const noexcept { return indices_.size(); }
  int operator[](std::size_t k) const { return indices_[k]; }
  const std::vector<int>& indices() const noexcept { return indices_; }
  SettingClass setting_class() const noexcept { return class_; }
  std::size_t count(int value) const noexcept;
  std::string str() const;

  bool operator==(const SettingString&) const = default;

 private:
  std::vector<int> indices_;
  SettingClass class_;
};

struct IndexSets {
  std::vector<SettingString> c;
  std::vector<SettingString> c_prime;
};

/// C (2^(n-1) strings) and C' (2^(n-1) - 1 strings) for n >= 2. C is listed
/// in lexicographic order over 1 < 2; C' over 3 < 0, e.g. 330, 303, 033.
IndexSets index_sets(std::size_t n);

/// Three pairwise-anticommuting, unit-spectrum qubit observables plus the
/// identity at setting 0.
class MubTriple {
 public:
  static MubTriple pauli();
  /// U sigma_k U^dagger for a 2x2 unitary U. Throws RangeError when U is not
  /// unitary within 1e-10.
  static MubTriple rotated(const ComplexMatrix& unitary);

  /// Setting 0 is I_2; settings 1..3 are the triple.
  const ComplexMatrix& observable(int setting) const;
  /// Projector onto outcome a in {0, 1}: (I + (-1)^a x) / 2; setting 0 has
  /// outcome 0 -> I and outcome 1 -> 0.
  ComplexMatrix projector(int setting, int outcome) const;
  bool is_pauli() const;

 private:
  explicit MubTriple(std::array<ComplexMatrix, 4> obs) : obs_(std::move(obs)) {}
  std::array<ComplexMatrix, 4> obs_;
};

/// The central party's fixed 2^n-outcome GHZ-basis measurement.
class FixedMeasurement {
 public:
  FixedMeasurement(std::size_t n, std::vector<ComplexMatrix> projectors);

  std::size_t n() const noexcept { return n_; }
  std::size_t outcome_count() const noexcept { return projectors_.size(); }
  const ComplexMatrix& projector(const Bitstring& b) const;
  const ComplexMatrix& projector(std::size_t index) const { return projectors_.at(index); }
  const std::vector<ComplexMatrix>& projectors() const noexcept { return projectors_; }

 private:
  std::size_t n_;
  std::vector<ComplexMatrix> projectors_;
};

/// For every t with t_1 = 0, G_t = |psi+_t><psi+_t| and G_{t-bar} =
/// |psi-_t><psi-_t| with |psi+-_t> = (|t> +- |t-bar>)/sqrt(2).
/// Throws SizeLimitError unless 1 <= n <= 6.
FixedMeasurement ghz_projectors(std::size_t n);

/// The signed central observable y^{i_1...i_n} assembled from the GHZ
/// projectors.
ComplexMatrix y_operator(std::size_t n, const SettingString& s);
ComplexMatrix y_operator(const FixedMeasurement& meas, const SettingString& s);

/// y^s written as sign * (x)_k sigma_{paulis[k]}: class C gives X where
/// i_k = 1 and Y where i_k = 2 with sign (-1)^(m/2), m = number of 2s; class
/// C' gives Z where i_k = 3 and I where i_k = 0 with sign +1.
struct PauliForm {
  int sign;
  std::vector<int> paulis;
};
PauliForm y_pauli_form(const SettingString& s);

/// Kronecker product of Paulis (0 = I, 1 = X, 2 = Y, 3 = Z).
ComplexMatrix pauli_string(const std::vector<int>& paulis);

/// Parity R in {0, 1} with y^s = sum_b (-1)^R G_b.
int sign_exponent(std::size_t n, const SettingString& s, const Bitstring& b);

}  // namespace netsteer
