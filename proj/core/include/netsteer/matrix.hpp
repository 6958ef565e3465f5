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

// Dense complex square matrices for states, projectors and observables.
//
// Storage is row-major: entry (i, j) lives at i * dim + j. Kronecker factor 0
// is always the leftmost factor, so for kron(a, b) the row index is
// i_a * dim(b) + i_b. Everything in the library uses this one convention.
//
// A global operator over n source pairs has dimension 4^n and occupies
// 16^(n+1) bytes: 16 MiB at n = 5, 256 MiB at n = 6. Callers that build
// global operators guard n accordingly.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace netsteer {

using Complex = std::complex<double>;

/// Project-wide tolerance for eigenvalue accuracy.
inline constexpr double kEigenTolerance = 1e-9;
/// Hermiticity / trace tolerance used when validating density operators.
inline constexpr double kStateTolerance = 1e-10;

class ComplexMatrix {
 public:
  /// Zero matrix of the given dimension (dim >= 1).
  explicit ComplexMatrix(std::size_t dim);
  /// Takes ownership of dim * dim row-major entries.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);
  /// |v><v| for a (not necessarily normalized) ket.
  static ComplexMatrix outer(std::span<const Complex> ket);
  static ComplexMatrix diagonal(std::span<const Complex> values);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  Complex operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  Complex& operator()(std::size_t row, std::size_t col) {
    return entries_[row * dim_ + col];
  }

  Complex trace() const;
  ComplexMatrix adjoint() const;
  /// Entrywise complex conjugate (not the adjoint).
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  /// Largest |a_ij - b_ij|. Dimensions must match.
  double max_abs_diff(const ComplexMatrix& other) const;
  bool is_hermitian(double tol = kStateTolerance) const;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scale);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
/// Left fold of kron over the factors; factors must be nonempty.
ComplexMatrix kron_all(std::span<const ComplexMatrix> factors);

/// Tr(a * b) in O(dim^2) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out every factor not listed in `keep`. Kept factors appear in the
/// result in increasing factor order; an empty `keep` gives the 1x1 trace.
/// Throws DimensionError when the factor dimensions do not multiply to
/// rho.dim() or a kept index is out of range.
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::span<const std::size_t> factor_dims,
                            std::span<const std::size_t> keep);

/// Reorders tensor factors: factor j of the result is factor perm[j] of the
/// input.
ComplexMatrix permute_factors(const ComplexMatrix& m,
                              std::span<const std::size_t> factor_dims,
                              std::span<const std::size_t> perm);

/// Ascending eigenvalues of a Hermitian matrix. Throws HermiticityError when
/// `h` is not Hermitian within 1e-10.
std::vector<double> eigenvalues(const ComplexMatrix& h);
double max_eigenvalue(const ComplexMatrix& h);
double min_eigenvalue(const ComplexMatrix& h);
/// Largest |eigenvalue| of a Hermitian matrix.
double operator_norm(const ComplexMatrix& h);

struct Eigenpair {
  double value;
  std::vector<Complex> vector;
};
/// Largest eigenvalue and a unit eigenvector for it.
Eigenpair max_eigenpair(const ComplexMatrix& h);

/// Throws unless rho is Hermitian and has unit trace, both within 1e-10.
void require_density_normalization(const ComplexMatrix& rho);

namespace pauli {
const ComplexMatrix& identity();
const ComplexMatrix& x();
const ComplexMatrix& y();
const ComplexMatrix& z();
/// 0 -> I, 1 -> X, 2 -> Y, 3 -> Z.
const ComplexMatrix& by_index(int index);
}  // namespace pauli

}  // namespace netsteer
