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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "netsteer/errors.hpp"
#include "netsteer/states.hpp"
#include "test_util.hpp"

namespace netsteer {
namespace {

using testing::matrices_near;

ComplexMatrix phi_plus() {
  const double s = 1.0 / std::sqrt(2.0);
  const std::array<Complex, 4> v{s, 0.0, 0.0, s};
  return ComplexMatrix::outer(v);
}

// Singular values of C from the eigenvalues of C^T C, via the trigonometric
// solution of the characteristic cubic.
Vec3 singular_values_by_cubic(const Mat3& c) {
  double m[3][3] = {};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m[i][j] += c[k][i] * c[k][j];
  const double q = (m[0][0] + m[1][1] + m[2][2]) / 3.0;
  const double p1 = m[0][1] * m[0][1] + m[0][2] * m[0][2] + m[1][2] * m[1][2];
  std::array<double, 3> ev;
  if (p1 < 1e-300) {
    ev = {m[0][0], m[1][1], m[2][2]};
  } else {
    const double p2 = (m[0][0] - q) * (m[0][0] - q) + (m[1][1] - q) * (m[1][1] - q) +
                      (m[2][2] - q) * (m[2][2] - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    double b[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) b[i][j] = (m[i][j] - (i == j ? q : 0.0)) / p;
    const double det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                       b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                       b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    const double r = std::clamp(det / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    ev[0] = q + 2.0 * p * std::cos(phi);
    ev[2] = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    ev[1] = 3.0 * q - ev[0] - ev[2];
  }
  Vec3 out;
  for (int i = 0; i < 3; ++i) out[static_cast<std::size_t>(i)] = std::sqrt(std::max(ev[static_cast<std::size_t>(i)], 0.0));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Mat3 random_rotation(std::mt19937& rng) {
  std::normal_distribution<double> g;
  Mat3 r;
  for (auto& row : r)
    for (double& x : row) x = g(rng);
  // Gram-Schmidt on the rows, then fix the determinant.
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < 3; ++k) dot += r[i][k] * r[j][k];
      for (std::size_t k = 0; k < 3; ++k) r[i][k] -= dot * r[j][k];
    }
    double norm = 0.0;
    for (double x : r[i]) norm += x * x;
    for (double& x : r[i]) x /= std::sqrt(norm);
  }
  const double det = r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
                     r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
                     r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
  if (det < 0)
    for (double& x : r[2]) x = -x;
  return r;
}

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Mat3 transpose(const Mat3& a) {
  Mat3 t{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

TEST(WernerTest, EndpointsAreBellStateAndMaximallyMixed) {
  EXPECT_TRUE(matrices_near(make_werner(1.0).rho(), phi_plus(), 1e-15));
  EXPECT_TRUE(matrices_near(make_werner(0.0).rho(), Complex(0.25) * ComplexMatrix::identity(4),
                            1e-15));
}

TEST(WernerTest, MatchesBellDiagonalForm) {
  for (double p : {0.0, 0.2, 0.6, 0.93, 1.0})
    EXPECT_TRUE(matrices_near(make_werner(p).rho(), make_bell_diagonal(p, -p, p).rho(), 1e-14));
  const Vec3 c = make_werner(0.6).diagonal_correlations();
  EXPECT_DOUBLE_EQ(c[0], 0.6);
  EXPECT_DOUBLE_EQ(c[1], -0.6);
  EXPECT_DOUBLE_EQ(c[2], 0.6);
}

TEST(WernerTest, RejectsOutOfRange) {
  EXPECT_THROW(make_werner(1.2), RangeError);
  EXPECT_THROW(make_werner(-0.1), RangeError);
}

TEST(BellDiagonalTest, Examples) {
  EXPECT_TRUE(matrices_near(make_bell_diagonal(0, 0, 0).rho(),
                            Complex(0.25) * ComplexMatrix::identity(4), 1e-15));
  EXPECT_TRUE(matrices_near(make_bell_diagonal(1, -1, 1).rho(), phi_plus(), 1e-15));
}

TEST(BellDiagonalTest, OutsideTetrahedronIsPsdError) {
  try {
    make_bell_diagonal(1, 1, 1);
    FAIL() << "expected PsdError";
  } catch (const PsdError& e) {
    EXPECT_NEAR(e.min_eigenvalue(), -0.5, 1e-12);
    EXPECT_NE(std::string(e.what()).find("positive semidefinite"), std::string::npos);
  }
}

TEST(GeneralTest, ZeroMarginalsMatchBellDiagonal) {
  const Mat3 c{{{0.3, 0, 0}, {0, -0.2, 0}, {0, 0, 0.1}}};
  EXPECT_TRUE(matrices_near(make_general({0, 0, 0}, {0, 0, 0}, c).rho(),
                            make_bell_diagonal(0.3, -0.2, 0.1).rho(), 1e-15));
}

TEST(GeneralTest, AlignedZMarginalsGiveProductZeroState) {
  const Mat3 c{{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}};
  ComplexMatrix ket00(4);
  ket00(0, 0) = 1.0;
  EXPECT_TRUE(matrices_near(make_general({0, 0, 1}, {0, 0, 1}, c).rho(), ket00, 1e-15));
}

TEST(GeneralTest, ClassicallyCorrelatedState) {
  const Mat3 c{{{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}};
  ComplexMatrix expected(4);
  expected(0, 0) = 0.5;
  expected(3, 3) = 0.5;
  EXPECT_TRUE(matrices_near(make_general({0, 0, 0}, {0, 0, 0}, c).rho(), expected, 1e-15));
}

TEST(GeneralTest, LongBlochVectorIsPsdError) {
  EXPECT_THROW(make_general({2, 0, 0}, {0, 0, 0}, Mat3{}), PsdError);
}

TEST(RawTest, RejectsNonHermitianAndBadTrace) {
  auto m = ComplexMatrix::identity(4);
  m *= 0.25;
  m(0, 1) = 0.1;
  EXPECT_THROW(make_raw(m), HermiticityError);
  EXPECT_THROW(make_raw(ComplexMatrix::identity(4)), RangeError);
  EXPECT_THROW(make_raw(ComplexMatrix::identity(2) * Complex(0.5)), DimensionError);
}

TEST(RawTest, CorrelationMatrixFromPauliProjection) {
  const auto src = make_raw(make_werner(0.4).rho());
  EXPECT_FALSE(src.is_structured());
  EXPECT_THROW(src.diagonal_correlations(), UnstructuredSourceError);
  const Mat3 c = src.correlation_matrix();
  EXPECT_NEAR(c[0][0], 0.4, 1e-14);
  EXPECT_NEAR(c[1][1], -0.4, 1e-14);
  EXPECT_NEAR(c[2][2], 0.4, 1e-14);
  EXPECT_NEAR(c[0][1], 0.0, 1e-14);
}

TEST(CorrelationSvdTest, Examples) {
  const Vec3 d = correlation_svd(make_bell_diagonal(0.6, -0.6, 0.6));
  for (double x : d) EXPECT_NEAR(x, 0.6, 1e-12);
  const Vec3 z = correlation_svd(make_bell_diagonal(0, 0, 0));
  for (double x : z) EXPECT_NEAR(x, 0.0, 1e-12);
}

TEST(CorrelationSvdTest, AgreesWithCubicOracle) {
  // Eigenvalues 0.6, 0.4, -0.2: inside the Bell-diagonal tetrahedron.
  const Mat3 c{{{0.5, 0.1, 0}, {0.1, 0.5, 0}, {0, 0, -0.2}}};
  const Vec3 expected = singular_values_by_cubic(c);
  EXPECT_NEAR(expected[0], 0.6, 1e-12);
  EXPECT_NEAR(expected[1], 0.4, 1e-12);
  EXPECT_NEAR(expected[2], 0.2, 1e-12);
  const Vec3 d = correlation_svd(make_general({0, 0, 0}, {0, 0, 0}, c));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(d[i], expected[i], 1e-10);
}

TEST(CorrelationSvdTest, RotationInvariantOnRandomInputs) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-0.15, 0.15);
  for (int trial = 0; trial < 50; ++trial) {
    Mat3 c;
    for (auto& row : c)
      for (double& x : row) x = u(rng);
    const Vec3 base = correlation_svd(make_general({0, 0, 0}, {0, 0, 0}, c));
    const Vec3 oracle = singular_values_by_cubic(c);
    const Mat3 rotated = multiply(multiply(random_rotation(rng), c), transpose(random_rotation(rng)));
    const Vec3 turned = correlation_svd(make_general({0, 0, 0}, {0, 0, 0}, rotated));
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_NEAR(base[i], oracle[i], 1e-10);
      EXPECT_NEAR(base[i], turned[i], 1e-10);
    }
  }
}

TEST(GlobalStateTest, SinglePairIsTheSource) {
  const auto src = make_werner(0.3);
  EXPECT_TRUE(matrices_near(assemble_global(StarNetwork({src})), src.rho(), 0.0));
}

TEST(GlobalStateTest, TwoBellPairsReduceToMaximallyMixedEdges) {
  const auto global = assemble_global(StarNetwork::uniform(make_werner(1.0), 2));
  EXPECT_EQ(global.dim(), 16u);
  const std::array<std::size_t, 4> dims{2, 2, 2, 2};
  const std::array<std::size_t, 2> edges{0, 1};
  EXPECT_TRUE(matrices_near(partial_trace(global, dims, edges),
                            Complex(0.25) * ComplexMatrix::identity(4), 1e-14));
  EXPECT_NEAR(std::abs(trace_of_product(global, global) - 1.0), 0.0, 1e-12);
}

TEST(GlobalStateTest, ProductOfWernerStatesIsDensity) {
  const auto global = assemble_global(StarNetwork::uniform(make_werner(0.5), 2));
  EXPECT_NEAR(global.trace().real(), 1.0, 1e-12);
  EXPECT_GE(min_eigenvalue(global), -1e-10);
}

TEST(GlobalStateTest, PairReductionsRecoverSources) {
  std::mt19937 rng(12);
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<TwoQubitSource> sources;
    for (std::size_t k = 0; k < n; ++k) sources.push_back(testing::random_bell_diagonal(rng));
    const auto global = assemble_global(StarNetwork(sources));
    const std::vector<std::size_t> dims(2 * n, 2);
    for (std::size_t k = 0; k < n; ++k) {
      const std::array<std::size_t, 2> keep{k, n + k};
      EXPECT_TRUE(matrices_near(partial_trace(global, dims, keep), sources[k].rho(), 1e-12));
    }
  }
}

TEST(GlobalStateTest, MatchesPermutedInterleavedKron) {
  std::mt19937 rng(13);
  const std::size_t n = 3;
  std::vector<TwoQubitSource> sources;
  std::vector<ComplexMatrix> rhos;
  for (std::size_t k = 0; k < n; ++k) {
    sources.push_back(testing::random_bell_diagonal(rng));
    rhos.push_back(sources.back().rho());
  }
  // Interleaved order A1 B1 A2 B2 A3 B3 -> grouped A1 A2 A3 B1 B2 B3.
  const std::vector<std::size_t> dims(2 * n, 2);
  const std::array<std::size_t, 6> perm{0, 2, 4, 1, 3, 5};
  EXPECT_TRUE(matrices_near(assemble_global(StarNetwork(sources)),
                            permute_factors(kron_all(rhos), dims, perm), 1e-15));
}

TEST(GlobalStateTest, SizeLimit) {
  EXPECT_THROW(assemble_global(StarNetwork::uniform(make_werner(0.5), 7)), SizeLimitError);
}

TEST(StarNetworkTest, RejectsEmpty) {
  EXPECT_THROW(StarNetwork(std::vector<TwoQubitSource>{}), ValidationError);
}

}  // namespace
}  // namespace netsteer
