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
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "netsteer/matrix.hpp"

namespace netsteer {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

/// Minimum eigenvalue tolerated for a physical state.
inline constexpr double kPsdTolerance = 1e-10;
/// Largest star network a global dense operator is built for.
inline constexpr std::size_t kMaxGlobalPairs = 6;

struct WernerParams {
  double p;
};
struct BellDiagonalParams {
  Vec3 c;
};
struct GeneralParams {
  Vec3 a;
  Vec3 b;
  Mat3 C;
};
struct RawParams {};

enum class SourceKind { werner, bell_diagonal, general, raw };

std::string to_string(SourceKind kind);

/// A two-qubit state shared between one edge party (first qubit) and the
/// central party (second qubit). Always Hermitian, unit trace and PSD.
class TwoQubitSource {
 public:
  using Params = std::variant<WernerParams, BellDiagonalParams, GeneralParams, RawParams>;

  const ComplexMatrix& rho() const noexcept { return rho_; }
  const Params& params() const noexcept { return params_; }
  SourceKind kind() const noexcept;

  /// True for Werner and Bell-diagonal sources, whose correlation matrix is
  /// diagonal with known entries.
  bool is_structured() const noexcept;
  /// (c1, c2, c3) for structured sources; throws UnstructuredSourceError
  /// otherwise. Werner(p) gives (p, -p, p).
  Vec3 diagonal_correlations() const;
  /// C_kl = Tr(rho sigma_k (x) sigma_l), k, l in {x, y, z}.
  Mat3 correlation_matrix() const;

  friend TwoQubitSource make_werner(double p);
  friend TwoQubitSource make_bell_diagonal(double c1, double c2, double c3);
  friend TwoQubitSource make_general(const Vec3& a, const Vec3& b, const Mat3& C);
  friend TwoQubitSource make_raw(ComplexMatrix rho);

 private:
  TwoQubitSource(ComplexMatrix rho, Params params);

  ComplexMatrix rho_;
  Params params_;
};

/// (1 - p)/4 I + p |phi+><phi+|, p in [0, 1]. Throws RangeError otherwise.
TwoQubitSource make_werner(double p);
/// 1/4 (I + sum_k c_k sigma_k (x) sigma_k). Throws PsdError outside the
/// physical tetrahedron.
TwoQubitSource make_bell_diagonal(double c1, double c2, double c3);
/// 1/4 (I + a.sigma (x) I + I (x) b.sigma + sum_kl C_kl sigma_k (x) sigma_l).
TwoQubitSource make_general(const Vec3& a, const Vec3& b, const Mat3& C);
/// Any valid 4x4 density matrix.
TwoQubitSource make_raw(ComplexMatrix rho);

/// Singular values of the correlation matrix, sorted descending.
Vec3 correlation_svd(const TwoQubitSource& source);

/// n independent sources; source k is shared by edge party A_k and central
/// qubit B_k. Global ordering is A_1 ... A_n B_1 ... B_n.
class StarNetwork {
 public:
  explicit StarNetwork(std::vector<TwoQubitSource> sources);

  static StarNetwork uniform(const TwoQubitSource& source, std::size_t n);

  std::size_t size() const noexcept { return sources_.size(); }
  const std::vector<TwoQubitSource>& sources() const noexcept { return sources_; }
  const TwoQubitSource& source(std::size_t k) const { return sources_.at(k); }
  bool all_structured() const noexcept;

 private:
  std::vector<TwoQubitSource> sources_;
};

/// Maps a global index in grouped order (A_1..A_n B_1..B_n, one bit each,
/// A_1 most significant) to the interleaved order (A_1 B_1)(A_2 B_2)... used
/// by the plain Kronecker product of the sources. A bijection on [0, 4^n).
std::size_t grouped_to_interleaved(std::size_t grouped_index, std::size_t n);

/// The 4^n-dimensional global density matrix in grouped order. Throws
/// SizeLimitError for n > 6.
ComplexMatrix assemble_global(const StarNetwork& network);

}  // namespace netsteer
