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

#include <array>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "netsteer/errors.hpp"
#include "netsteer/matrix.hpp"
#include "test_util.hpp"

namespace netsteer {
namespace {

using testing::matrices_near;

const double kSqrt2 = std::sqrt(2.0);

ComplexMatrix phi_plus() {
  const std::array<Complex, 4> v{1.0 / kSqrt2, 0.0, 0.0, 1.0 / kSqrt2};
  return ComplexMatrix::outer(v);
}

TEST(KronTest, IdentityTimesIdentity) {
  EXPECT_TRUE(matrices_near(kron(pauli::identity(), pauli::identity()),
                            ComplexMatrix::identity(4), 0.0));
}

TEST(KronTest, XTimesZHasOffDiagonalZBlocks) {
  const auto expected = ComplexMatrix::from_rows(
      {{0, 0, 1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
  EXPECT_TRUE(matrices_near(kron(pauli::x(), pauli::z()), expected, 0.0));
}

TEST(KronTest, YYOnPhiPlusHasTraceMinusOne) {
  const Complex t = trace_of_product(phi_plus(), kron(pauli::y(), pauli::y()));
  EXPECT_NEAR(t.real(), -1.0, 1e-12);
  EXPECT_NEAR(t.imag(), 0.0, 1e-12);
}

// Entry products are exact for small Gaussian integers, so any layout
// mismatch shows up as a nonzero difference.
TEST(KronTest, AssociativeExactly) {
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-4, 4);
  auto integer_matrix = [&](std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = Complex(d(rng), d(rng));
    return m;
  };
  const auto a = integer_matrix(2);
  const auto b = integer_matrix(3);
  const auto c = integer_matrix(2);
  EXPECT_TRUE(matrices_near(kron(kron(a, b), c), kron(a, kron(b, c)), 0.0));
}

TEST(KronTest, AssociativeOnRandomEntries) {
  std::mt19937 rng(1);
  const auto a = testing::random_hermitian(2, rng);
  const auto b = testing::random_hermitian(3, rng);
  const auto c = testing::random_hermitian(2, rng);
  EXPECT_TRUE(matrices_near(kron(kron(a, b), c), kron(a, kron(b, c)), 1e-14));
}

TEST(KronTest, TraceFactorizes) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testing::random_hermitian(2 + trial % 3, rng);
    const auto b = testing::random_hermitian(2 + trial % 2, rng);
    EXPECT_NEAR(std::abs(kron(a, b).trace() - a.trace() * b.trace()), 0.0, 1e-12);
  }
}

TEST(PartialTraceTest, BellStateReducesToMaximallyMixed) {
  const std::array<std::size_t, 2> dims{2, 2};
  const std::array<std::size_t, 1> keep{0};
  const auto reduced = partial_trace(phi_plus(), dims, keep);
  EXPECT_TRUE(matrices_near(reduced, Complex(0.5) * ComplexMatrix::identity(2), 1e-14));
}

TEST(PartialTraceTest, ProductFactorization) {
  std::mt19937 rng(3);
  const auto a = testing::random_hermitian(3, rng);
  const auto b = testing::random_hermitian(2, rng);
  const std::array<std::size_t, 2> dims{3, 2};
  const std::array<std::size_t, 1> keep_first{0};
  const std::array<std::size_t, 1> keep_second{1};
  EXPECT_TRUE(matrices_near(partial_trace(kron(a, b), dims, keep_first), b.trace() * a, 1e-12));
  EXPECT_TRUE(matrices_near(partial_trace(kron(a, b), dims, keep_second), a.trace() * b, 1e-12));
}

TEST(PartialTraceTest, TracingEverythingGivesTrace) {
  std::mt19937 rng(4);
  const auto h = testing::random_hermitian(8, rng);
  const std::array<std::size_t, 3> dims{2, 2, 2};
  const auto scalar = partial_trace(h, dims, std::span<const std::size_t>{});
  ASSERT_EQ(scalar.dim(), 1u);
  EXPECT_NEAR(std::abs(scalar(0, 0) - h.trace()), 0.0, 1e-12);
}

TEST(PartialTraceTest, RejectsMismatchedDims) {
  const std::array<std::size_t, 2> dims{2, 3};
  const std::array<std::size_t, 1> keep{0};
  EXPECT_THROW(partial_trace(phi_plus(), dims, keep), DimensionError);
}

TEST(PermuteFactorsTest, SwapMatchesReversedKron) {
  std::mt19937 rng(5);
  const auto a = testing::random_hermitian(2, rng);
  const auto b = testing::random_hermitian(3, rng);
  const std::array<std::size_t, 2> dims{2, 3};
  const std::array<std::size_t, 2> perm{1, 0};
  EXPECT_TRUE(matrices_near(permute_factors(kron(a, b), dims, perm), kron(b, a), 1e-14));
}

TEST(EigenTest, LemmaStyleSums) {
  EXPECT_NEAR(max_eigenvalue(pauli::x() + pauli::z()), kSqrt2, 1e-12);
  EXPECT_NEAR(max_eigenvalue(pauli::x() + pauli::y() + pauli::z()), std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(max_eigenvalue(pauli::identity()), 1.0, 1e-12);
}

TEST(EigenTest, MinimumEigenvalues) {
  EXPECT_NEAR(min_eigenvalue(pauli::identity()), 1.0, 1e-12);
  EXPECT_NEAR(min_eigenvalue(pauli::z()), -1.0, 1e-12);
  // Werner(0.5) by hand: (1 - p)/4 I + p |phi+><phi+|.
  const auto werner = Complex(0.125) * ComplexMatrix::identity(4) + Complex(0.5) * phi_plus();
  EXPECT_NEAR(min_eigenvalue(werner), 0.125, 1e-12);
  EXPECT_NEAR(max_eigenvalue(werner), 0.625, 1e-12);
}

TEST(EigenTest, RayleighQuotientBound) {
  std::mt19937 rng(6);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 2 + trial % 7;
    const auto h = testing::random_hermitian(d, rng);
    std::vector<Complex> v(d);
    for (auto& x : v) x = Complex(g(rng), g(rng));
    Complex num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      den += std::norm(v[i]);
      for (std::size_t j = 0; j < d; ++j) num += std::conj(v[i]) * h(i, j) * v[j];
    }
    EXPECT_GE(max_eigenvalue(h) + 1e-9, num.real() / den);
  }
}

TEST(EigenTest, EigenpairSatisfiesEquation) {
  std::mt19937 rng(7);
  const auto h = testing::random_hermitian(6, rng);
  const auto top = max_eigenpair(h);
  EXPECT_NEAR(top.value, max_eigenvalue(h), 1e-10);
  for (std::size_t i = 0; i < 6; ++i) {
    Complex hv = 0.0;
    for (std::size_t j = 0; j < 6; ++j) hv += h(i, j) * top.vector[j];
    EXPECT_NEAR(std::abs(hv - top.value * top.vector[i]), 0.0, 1e-10);
  }
}

TEST(EigenTest, RejectsNonHermitian) {
  const auto m = ComplexMatrix::from_rows({{0, 1}, {0, 0}});
  EXPECT_THROW(eigenvalues(m), HermiticityError);
}

}  // namespace
}  // namespace netsteer
