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

#include "netsteer/matrix.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "netsteer/errors.hpp"

namespace netsteer {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw DimensionError("matrix dimension must be at least 1");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw DimensionError("matrix dimension must be at least 1");
  if (entries_.size() != dim * dim) {
    throw DimensionError("expected " + std::to_string(dim * dim) +
                         " entries, got " + std::to_string(entries_.size()));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t dim = rows.size();
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (const auto& row : rows) {
    if (row.size() != dim) throw DimensionError("from_rows: matrix must be square");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(dim, std::move(entries));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> ket) {
  ComplexMatrix m(ket.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < ket.size(); ++j) m(i, j) = ket[i] * std::conj(ket[j]);
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(*this);
  for (auto& e : m.entries_) e = std::conj(e);
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw DimensionError("matrix sum: dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw DimensionError("matrix difference: dimension mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (other.dim_ != dim_) throw DimensionError("max_abs_diff: dimension mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
  return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }
ComplexMatrix operator*(ComplexMatrix m, Complex scale) { return m *= scale; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("matrix product: dimension mismatch");
  const std::size_t d = a.dim();
  ComplexMatrix c(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < d; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0)) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) throw DimensionError("kron_all: no factors");
  ComplexMatrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace_of_product: dimension mismatch");
  const std::size_t d = a.dim();
  Complex sum = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) sum += a(i, j) * b(j, i);
  return sum;
}

namespace {

std::size_t checked_product(std::span<const std::size_t> dims, std::size_t expected,
                            const char* who) {
  std::size_t total = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw DimensionError(std::string(who) + ": zero factor dimension");
    total *= d;
  }
  if (total != expected) {
    throw DimensionError(std::string(who) + ": factor dimensions multiply to " +
                         std::to_string(total) + " but matrix dimension is " +
                         std::to_string(expected));
  }
  return total;
}

// Row-major strides of each factor within the full index.
std::vector<std::size_t> factor_strides(std::span<const std::size_t> dims) {
  std::vector<std::size_t> strides(dims.size());
  std::size_t stride = 1;
  for (std::size_t k = dims.size(); k-- > 0;) {
    strides[k] = stride;
    stride *= dims[k];
  }
  return strides;
}

// Offsets in the full index spanned by the given subset of factors, enumerated
// in row-major order over that subset.
std::vector<std::size_t> subset_offsets(std::span<const std::size_t> dims,
                                        std::span<const std::size_t> strides,
                                        const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> offsets{0};
  for (std::size_t f : subset) {
    std::vector<std::size_t> next;
    next.reserve(offsets.size() * dims[f]);
    for (std::size_t base : offsets)
      for (std::size_t v = 0; v < dims[f]; ++v) next.push_back(base + v * strides[f]);
    offsets = std::move(next);
  }
  return offsets;
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            std::span<const std::size_t> factor_dims,
                            std::span<const std::size_t> keep) {
  checked_product(factor_dims, rho.dim(), "partial_trace");

  std::vector<bool> kept(factor_dims.size(), false);
  for (std::size_t f : keep) {
    if (f >= factor_dims.size())
      throw DimensionError("partial_trace: factor index " + std::to_string(f) +
                           " out of range");
    kept[f] = true;
  }
  std::vector<std::size_t> keep_list;
  std::vector<std::size_t> trace_list;
  for (std::size_t f = 0; f < factor_dims.size(); ++f)
    (kept[f] ? keep_list : trace_list).push_back(f);

  const auto strides = factor_strides(factor_dims);
  const auto keep_off = subset_offsets(factor_dims, strides, keep_list);
  const auto trace_off = subset_offsets(factor_dims, strides, trace_list);

  ComplexMatrix out(keep_off.size());
  for (std::size_t r = 0; r < keep_off.size(); ++r)
    for (std::size_t c = 0; c < keep_off.size(); ++c) {
      Complex sum = 0.0;
      for (std::size_t t : trace_off) sum += rho(keep_off[r] + t, keep_off[c] + t);
      out(r, c) = sum;
    }
  return out;
}

ComplexMatrix permute_factors(const ComplexMatrix& m,
                              std::span<const std::size_t> factor_dims,
                              std::span<const std::size_t> perm) {
  checked_product(factor_dims, m.dim(), "permute_factors");
  if (perm.size() != factor_dims.size())
    throw DimensionError("permute_factors: permutation length mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p])
      throw DimensionError("permute_factors: not a permutation");
    seen[p] = true;
  }

  const auto old_strides = factor_strides(factor_dims);
  std::vector<std::size_t> new_dims(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) new_dims[j] = factor_dims[perm[j]];

  // new index -> old index
  std::vector<std::size_t> map(m.dim());
  std::vector<std::size_t> digits(perm.size(), 0);
  for (std::size_t idx = 0; idx < m.dim(); ++idx) {
    std::size_t old = 0;
    for (std::size_t j = 0; j < perm.size(); ++j) old += digits[j] * old_strides[perm[j]];
    map[idx] = old;
    for (std::size_t j = perm.size(); j-- > 0;) {
      if (++digits[j] < new_dims[j]) break;
      digits[j] = 0;
    }
  }

  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(map[i], map[j]);
  return out;
}

std::vector<double> eigenvalues(const ComplexMatrix& h) {
  if (!h.is_hermitian(kStateTolerance))
    throw HermiticityError("eigenvalues: matrix is not Hermitian within 1e-10");
  using RowMajor =
      Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const auto d = static_cast<Eigen::Index>(h.dim());
  Eigen::Map<const RowMajor> view(h.entries().data(), d, d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(view,
                                                         Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw InternalError("eigenvalues: Hermitian eigensolver did not converge");
  const Eigen::VectorXd& values = solver.eigenvalues();
  return std::vector<double>(values.data(), values.data() + values.size());
}

double max_eigenvalue(const ComplexMatrix& h) { return eigenvalues(h).back(); }

double min_eigenvalue(const ComplexMatrix& h) { return eigenvalues(h).front(); }

double operator_norm(const ComplexMatrix& h) {
  const auto ev = eigenvalues(h);
  return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

Eigenpair max_eigenpair(const ComplexMatrix& h) {
  if (!h.is_hermitian(kStateTolerance))
    throw HermiticityError("max_eigenpair: matrix is not Hermitian within 1e-10");
  using RowMajor =
      Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const auto d = static_cast<Eigen::Index>(h.dim());
  Eigen::Map<const RowMajor> view(h.entries().data(), d, d);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(view);
  if (solver.info() != Eigen::Success)
    throw InternalError("max_eigenpair: Hermitian eigensolver did not converge");
  const Eigen::VectorXcd top = solver.eigenvectors().col(d - 1);
  return {solver.eigenvalues()(d - 1), std::vector<Complex>(top.data(), top.data() + d)};
}

void require_density_normalization(const ComplexMatrix& rho) {
  if (!rho.is_hermitian(kStateTolerance))
    throw HermiticityError("density operator is not Hermitian within 1e-10");
  const Complex tr = rho.trace();
  if (std::abs(tr - Complex(1.0)) > kStateTolerance)
    throw RangeError("density operator trace is " + std::to_string(tr.real()) +
                     ", expected 1");
}

namespace pauli {

const ComplexMatrix& identity() {
  static const ComplexMatrix m = ComplexMatrix::identity(2);
  return m;
}
const ComplexMatrix& x() {
  static const ComplexMatrix m = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  return m;
}
const ComplexMatrix& y() {
  static const ComplexMatrix m =
      ComplexMatrix::from_rows({{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
  return m;
}
const ComplexMatrix& z() {
  static const ComplexMatrix m = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  return m;
}
const ComplexMatrix& by_index(int index) {
  switch (index) {
    case 0: return identity();
    case 1: return x();
    case 2: return y();
    case 3: return z();
    default: throw RangeError("Pauli index must be 0..3, got " + std::to_string(index));
  }
}

}  // namespace pauli

}  // namespace netsteer
