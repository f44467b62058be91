// Copyright 2026 The liouville authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace liouville {

using Complex = std::complex<double>;

/// Column vector of amplitudes in a Hilbert space.
using Ket = std::vector<Complex>;

/// Tensor factor dimensions of a bipartite space; subsystem 1 is the slow
/// index, so the composite index of (i1, i2) is i1 * second + i2.
struct Dims {
  std::size_t first;
  std::size_t second;
};

/// Which tensor factor of a bipartite space an operation acts on.
enum class Subsystem { First, Second };

/// Dense square complex matrix, row-major. Entry (i, j) is the coefficient
/// of |i><j|.
class Matrix {
public:
  Matrix() : Matrix(1) {}
  /// Zero matrix of the given dimension.
  explicit Matrix(std::size_t dim);
  /// Takes ownership of row-major entries; throws InvariantError on a
  /// non-finite entry and DimensionError unless entries.size() == dim*dim.
  Matrix(std::size_t dim, std::vector<Complex> entries);
  Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const Complex> diag);

  std::size_t dim() const noexcept { return dim_; }

  Complex &operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Complex &operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }

  std::span<const Complex> entries() const noexcept { return data_; }

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conj() const;
  Complex trace() const;

  Matrix &operator+=(const Matrix &rhs);
  Matrix &operator-=(const Matrix &rhs);
  Matrix &operator*=(Complex s);

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

Matrix operator+(Matrix lhs, const Matrix &rhs);
Matrix operator-(Matrix lhs, const Matrix &rhs);
Matrix operator*(const Matrix &lhs, const Matrix &rhs);
Matrix operator*(Complex s, Matrix m);
Ket operator*(const Matrix &m, const Ket &v);

/// |a><b|
Matrix ket_bra(const Ket &a, const Ket &b);
/// |a><a|
Matrix projector(const Ket &a);
/// <a|b>
Complex inner(const Ket &a, const Ket &b);
Ket kron(const Ket &a, const Ket &b);

/// Largest entry-wise modulus of a - b.
double max_abs_diff(const Matrix &a, const Matrix &b);
double frobenius_norm(const Matrix &m);

bool is_hermitian(const Matrix &m, double tol);
bool is_psd(const Matrix &m, double tol);
bool trace_one(const Matrix &m, double tol);

/// Kronecker product; entry (ia*db + ib, ja*db + jb) = a(ia,ja) * b(ib,jb).
Matrix kron(const Matrix &a, const Matrix &b);

/// Traces out the subsystem that is not `keep`.
Matrix partial_trace(const Matrix &m, Dims dims, Subsystem keep);

/// Transposes the indices of subsystem `which` only.
Matrix partial_transpose(const Matrix &m, Dims dims, Subsystem which);

/// Eigenpairs of a Hermitian matrix, eigenvalues descending. Column k of
/// `eigenvectors` belongs to eigenvalues[k].
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<Ket> eigenvectors;

  /// Sum_k lambda_k v_k v_k^dag.
  Matrix reconstruct() const;
  double min_eigenvalue() const { return eigenvalues.back(); }
  double max_eigenvalue() const { return eigenvalues.front(); }
};

/// Cyclic complex Jacobi eigensolver for small Hermitian matrices.
///
/// Sweeps until the off-diagonal Frobenius mass drops below 1e-13 of the
/// matrix norm (at most 100 sweeps). Eigenvectors within a cluster whose
/// eigenvalues differ by less than 1e-9 are re-orthonormalized in index
/// order, and every eigenvector is phased so that its first non-negligible
/// component is real positive. Identical input gives identical output.
/// Throws InvariantError if `m` is not Hermitian within `hermitian_tol`.
SpectralDecomposition eig_hermitian(const Matrix &m, double hermitian_tol = 1e-10);

} // namespace liouville
