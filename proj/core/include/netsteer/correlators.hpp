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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "netsteer/matrix.hpp"
#include "netsteer/measurements.hpp"
#include "netsteer/states.hpp"

namespace netsteer {

/// Largest network the dense (4^n-dimensional) correlator path accepts.
inline constexpr std::size_t kMaxDensePairs = 5;
/// Imaginary residue above which an expectation value is a hard error.
inline constexpr double kImaginaryResidue = 1e-8;

/// Sub-normalized edge-party states sigma_b, one per central outcome b.
class Assemblage {
 public:
  Assemblage(std::size_t n, std::vector<ComplexMatrix> elements);

  std::size_t n() const noexcept { return n_; }
  const ComplexMatrix& element(const Bitstring& b) const;
  const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }
  /// sum_b Tr(sigma_b); 1 for a valid assemblage.
  double total_trace() const;

 private:
  std::size_t n_;
  std::vector<ComplexMatrix> elements_;
};

/// sigma_b = Tr_B[(I_A (x) G_b) rho_global]. Requires meas.n() == net.size()
/// and net.size() <= 5.
Assemblage assemblage(const StarNetwork& net, const FixedMeasurement& meas);

/// p(a_1..a_n, b) = Tr[(x)_k Pi_k sigma_b]. Throws ProjectorError when any
/// Pi_k is not idempotent within 1e-10.
double joint_probability(const Assemblage& sigma, std::span<const ComplexMatrix> edge_projectors,
                         const Bitstring& b);
double joint_probability(const StarNetwork& net, std::span<const ComplexMatrix> edge_projectors,
                         const Bitstring& b, const FixedMeasurement& meas);

/// Real part of Tr(rho * observable); throws InternalError when the imaginary
/// part exceeds 1e-8.
double expectation(const ComplexMatrix& rho, const ComplexMatrix& observable);

/// (x)_k x^{i_k} on the edge parties, with x^0 = I.
ComplexMatrix edge_observable(const std::vector<int>& settings, const MubTriple& mub);

/// <(x)_k x^{i_k} (x) y^{i_1..i_n}> on the dense global state.
double correlator_dense(const StarNetwork& net, const SettingString& s, const MubTriple& mub);

/// Product rule for Werner/Bell-diagonal sources with Pauli edge observables:
/// sign(y^s) * prod_k c_{i_k}, c_0 = 1. Throws UnstructuredSourceError for any
/// other source kind.
double correlator_fast(std::span<const TwoQubitSource> sources, const SettingString& s);

enum class CorrelatorPath { automatic, dense, fast };

/// Evaluates correlators on one network, caching the dense global state and
/// GHZ projectors when the dense path is used. `automatic` picks the fast
/// path when every source is structured and the MUB triple is the Pauli one.
class CorrelatorEngine {
 public:
  CorrelatorEngine(const StarNetwork& net, MubTriple mub,
                   CorrelatorPath path = CorrelatorPath::automatic);

  std::size_t n() const noexcept { return net_.size(); }
  const MubTriple& mub() const noexcept { return mub_; }
  bool uses_fast_path() const noexcept { return fast_; }

  double correlator(const SettingString& s);
  /// <edge (x) central> on the global state, edge on A_1..A_n and central on
  /// B_1..B_n. Dense only.
  double product_expectation(const ComplexMatrix& edge, const ComplexMatrix& central);

 private:
  const ComplexMatrix& global();

  StarNetwork net_;
  MubTriple mub_;
  bool fast_;
  std::optional<ComplexMatrix> global_;
  std::optional<FixedMeasurement> ghz_;
};

/// Dispatching convenience wrapper around CorrelatorEngine.
double correlator(const StarNetwork& net, const SettingString& s, const MubTriple& mub,
                  CorrelatorPath path = CorrelatorPath::automatic);

}  // namespace netsteer
