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

#include "netsteer/states.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "netsteer/errors.hpp"

namespace netsteer {

namespace {

ComplexMatrix pauli_expansion(const Vec3& a, const Vec3& b, const Mat3& C) {
  ComplexMatrix rho = ComplexMatrix::identity(4);
  for (int j = 0; j < 3; ++j) {
    if (a[j] != 0.0) rho += Complex(a[j]) * kron(pauli::by_index(j + 1), pauli::identity());
    if (b[j] != 0.0) rho += Complex(b[j]) * kron(pauli::identity(), pauli::by_index(j + 1));
  }
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      if (C[k][l] != 0.0)
        rho += Complex(C[k][l]) * kron(pauli::by_index(k + 1), pauli::by_index(l + 1));
  rho *= 0.25;
  return rho;
}

void require_psd(const ComplexMatrix& rho, const char* what) {
  const double lowest = min_eigenvalue(rho);
  if (lowest < -kPsdTolerance) {
    std::ostringstream msg;
    msg << what << " is not positive semidefinite: minimum eigenvalue " << lowest;
    throw PsdError(msg.str(), lowest);
  }
}

}  // namespace

std::string to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::werner: return "werner";
    case SourceKind::bell_diagonal: return "bell_diagonal";
    case SourceKind::general: return "general";
    case SourceKind::raw: return "raw";
  }
  return "unknown";
}

TwoQubitSource::TwoQubitSource(ComplexMatrix rho, Params params)
    : rho_(std::move(rho)), params_(std::move(params)) {
  if (rho_.dim() != 4)
    throw DimensionError("two-qubit source must be 4x4, got " + std::to_string(rho_.dim()));
  require_density_normalization(rho_);
  require_psd(rho_, "two-qubit state");
}

SourceKind TwoQubitSource::kind() const noexcept {
  switch (params_.index()) {
    case 0: return SourceKind::werner;
    case 1: return SourceKind::bell_diagonal;
    case 2: return SourceKind::general;
    default: return SourceKind::raw;
  }
}

bool TwoQubitSource::is_structured() const noexcept {
  return std::holds_alternative<WernerParams>(params_) ||
         std::holds_alternative<BellDiagonalParams>(params_);
}

Vec3 TwoQubitSource::diagonal_correlations() const {
  if (const auto* w = std::get_if<WernerParams>(&params_)) return {w->p, -w->p, w->p};
  if (const auto* bd = std::get_if<BellDiagonalParams>(&params_)) return bd->c;
  throw UnstructuredSourceError("source of kind " + to_string(kind()) +
                                " has no closed-form diagonal correlations");
}

Mat3 TwoQubitSource::correlation_matrix() const {
  if (is_structured()) {
    const Vec3 c = diagonal_correlations();
    return {{{c[0], 0.0, 0.0}, {0.0, c[1], 0.0}, {0.0, 0.0, c[2]}}};
  }
  if (const auto* g = std::get_if<GeneralParams>(&params_)) return g->C;
  Mat3 C{};
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      C[k][l] = trace_of_product(rho_, kron(pauli::by_index(k + 1), pauli::by_index(l + 1)))
                    .real();
  return C;
}

TwoQubitSource make_werner(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw RangeError("Werner parameter p must lie in [0, 1], got " + std::to_string(p));
  const double s = 1.0 / std::sqrt(2.0);
  const std::array<Complex, 4> phi{s, 0.0, 0.0, s};
  ComplexMatrix rho = Complex((1.0 - p) / 4.0) * ComplexMatrix::identity(4) +
                      Complex(p) * ComplexMatrix::outer(phi);
  return TwoQubitSource(std::move(rho), WernerParams{p});
}

TwoQubitSource make_bell_diagonal(double c1, double c2, double c3) {
  const Vec3 zero{0.0, 0.0, 0.0};
  const Mat3 C{{{c1, 0.0, 0.0}, {0.0, c2, 0.0}, {0.0, 0.0, c3}}};
  return TwoQubitSource(pauli_expansion(zero, zero, C), BellDiagonalParams{{c1, c2, c3}});
}

TwoQubitSource make_general(const Vec3& a, const Vec3& b, const Mat3& C) {
  return TwoQubitSource(pauli_expansion(a, b, C), GeneralParams{a, b, C});
}

TwoQubitSource make_raw(ComplexMatrix rho) {
  return TwoQubitSource(std::move(rho), RawParams{});
}

Vec3 correlation_svd(const TwoQubitSource& source) {
  const Mat3 C = source.correlation_matrix();
  Eigen::Matrix3d m;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) m(k, l) = C[k][l];
  const Eigen::Vector3d sv = Eigen::JacobiSVD<Eigen::Matrix3d>(m).singularValues();
  Vec3 out{sv(0), sv(1), sv(2)};
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

StarNetwork::StarNetwork(std::vector<TwoQubitSource> sources) : sources_(std::move(sources)) {
  if (sources_.empty()) throw RangeError("star network needs at least one source");
}

StarNetwork StarNetwork::uniform(const TwoQubitSource& source, std::size_t n) {
  return StarNetwork(std::vector<TwoQubitSource>(n, source));
}

bool StarNetwork::all_structured() const noexcept {
  return std::all_of(sources_.begin(), sources_.end(),
                     [](const TwoQubitSource& s) { return s.is_structured(); });
}

std::size_t grouped_to_interleaved(std::size_t grouped_index, std::size_t n) {
  // Grouped bit positions (MSB first): A_1..A_n at 0..n-1, B_1..B_n at n..2n-1.
  // Interleaved: A_k at 2(k-1), B_k at 2(k-1)+1.
  std::size_t out = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t a_bit = (grouped_index >> (2 * n - 1 - k)) & 1u;
    const std::size_t b_bit = (grouped_index >> (n - 1 - k)) & 1u;
    out |= a_bit << (2 * n - 1 - 2 * k);
    out |= b_bit << (2 * n - 2 - 2 * k);
  }
  return out;
}

ComplexMatrix assemble_global(const StarNetwork& network) {
  const std::size_t n = network.size();
  if (n > kMaxGlobalPairs)
    throw SizeLimitError("assemble_global supports at most " +
                         std::to_string(kMaxGlobalPairs) + " sources, got " +
                         std::to_string(n));
  const std::size_t dim = std::size_t{1} << (2 * n);

  // Per global index, the 2-bit (A_k B_k) digit of each pair.
  std::vector<std::uint8_t> pair_digit(dim * n);
  for (std::size_t g = 0; g < dim; ++g) {
    const std::size_t inter = grouped_to_interleaved(g, n);
    for (std::size_t k = 0; k < n; ++k)
      pair_digit[g * n + k] = static_cast<std::uint8_t>((inter >> (2 * (n - 1 - k))) & 3u);
  }

  std::vector<const ComplexMatrix*> rhos;
  for (const auto& s : network.sources()) rhos.push_back(&s.rho());

  ComplexMatrix out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const std::uint8_t* rd = &pair_digit[r * n];
    for (std::size_t c = 0; c < dim; ++c) {
      const std::uint8_t* cd = &pair_digit[c * n];
      Complex v = 1.0;
      for (std::size_t k = 0; k < n && v != Complex(0.0); ++k)
        v *= (*rhos[k])(rd[k], cd[k]);
      out(r, c) = v;
    }
  }
  return out;
}

}  // namespace netsteer
