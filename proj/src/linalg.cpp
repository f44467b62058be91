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

#include "liouville/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

void require_same_dim(const Matrix &a, const Matrix &b, const char *op) {
  if (a.dim() != b.dim())
    throw DimensionError(std::string(op) + ": dimension " + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()));
}

void require_bipartite(const Matrix &m, Dims dims, const char *op) {
  if (dims.first == 0 || dims.second == 0 || m.dim() != dims.first * dims.second)
    throw DimensionError(std::string(op) + ": matrix dimension " + std::to_string(m.dim()) +
                         " is not " + std::to_string(dims.first) + "x" +
                         std::to_string(dims.second));
}

} // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0)
    throw DimensionError("Matrix: dimension must be positive");
}

Matrix::Matrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (dim == 0)
    throw DimensionError("Matrix: dimension must be positive");
  if (data_.size() != dim * dim)
    throw DimensionError("Matrix: expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(data_.size()));
  for (const auto &z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw InvariantError("Matrix: non-finite entry");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  if (dim_ == 0)
    throw DimensionError("Matrix: dimension must be positive");
  data_.reserve(dim_ * dim_);
  for (const auto &row : rows) {
    if (row.size() != dim_)
      throw DimensionError("Matrix: rows must form a square");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const Complex> diag) {
  Matrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    m(i, i) = diag[i];
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      r(j, i) = std::conj((*this)(i, j));
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::conj() const {
  Matrix r(*this);
  for (auto &z : r.data_)
    z = std::conj(z);
  return r;
}

Complex Matrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    t += (*this)(i, i);
  return t;
}

Matrix &Matrix::operator+=(const Matrix &rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k)
    data_[k] += rhs.data_[k];
  return *this;
}

Matrix &Matrix::operator-=(const Matrix &rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k)
    data_[k] -= rhs.data_[k];
  return *this;
}

Matrix &Matrix::operator*=(Complex s) {
  for (auto &z : data_)
    z *= s;
  return *this;
}

Matrix operator+(Matrix lhs, const Matrix &rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix &rhs) { return lhs -= rhs; }
Matrix operator*(Complex s, Matrix m) { return m *= s; }

Matrix operator*(const Matrix &lhs, const Matrix &rhs) {
  require_same_dim(lhs, rhs, "operator*");
  const std::size_t d = lhs.dim();
  Matrix r(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{})
        continue;
      for (std::size_t j = 0; j < d; ++j)
        r(i, j) += a * rhs(k, j);
    }
  return r;
}

Ket operator*(const Matrix &m, const Ket &v) {
  if (v.size() != m.dim())
    throw DimensionError("Matrix * Ket: dimension mismatch");
  Ket r(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      r[i] += m(i, j) * v[j];
  return r;
}

Matrix ket_bra(const Ket &a, const Ket &b) {
  if (a.size() != b.size() || a.empty())
    throw DimensionError("ket_bra: dimension mismatch");
  Matrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r(i, j) = a[i] * std::conj(b[j]);
  return r;
}

Matrix projector(const Ket &a) { return ket_bra(a, a); }

Complex inner(const Ket &a, const Ket &b) {
  if (a.size() != b.size())
    throw DimensionError("inner: dimension mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += std::conj(a[i]) * b[i];
  return s;
}

Ket kron(const Ket &a, const Ket &b) {
  Ket r;
  r.reserve(a.size() * b.size());
  for (const auto &x : a)
    for (const auto &y : b)
      r.push_back(x * y);
  return r;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

double frobenius_norm(const Matrix &m) {
  double s = 0.0;
  for (const auto &z : m.entries())
    s += std::norm(z);
  return std::sqrt(s);
}

bool is_hermitian(const Matrix &m, double tol) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol)
        return false;
  return true;
}

bool is_psd(const Matrix &m, double tol) {
  if (!is_hermitian(m, tol))
    return false;
  return eig_hermitian(m, tol).min_eigenvalue() >= -tol;
}

bool trace_one(const Matrix &m, double tol) { return std::abs(m.trace() - 1.0) <= tol; }

Matrix kron(const Matrix &a, const Matrix &b) {
  const std::size_t da = a.dim(), db = b.dim();
  Matrix r(da * db);
  for (std::size_t ia = 0; ia < da; ++ia)
    for (std::size_t ja = 0; ja < da; ++ja) {
      const Complex s = a(ia, ja);
      for (std::size_t ib = 0; ib < db; ++ib)
        for (std::size_t jb = 0; jb < db; ++jb)
          r(ia * db + ib, ja * db + jb) = s * b(ib, jb);
    }
  return r;
}

Matrix partial_trace(const Matrix &m, Dims dims, Subsystem keep) {
  require_bipartite(m, dims, "partial_trace");
  const auto [d1, d2] = dims;
  if (keep == Subsystem::First) {
    Matrix r(d1);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j)
        for (std::size_t k = 0; k < d2; ++k)
          r(i, j) += m(i * d2 + k, j * d2 + k);
    return r;
  }
  Matrix r(d2);
  for (std::size_t i = 0; i < d2; ++i)
    for (std::size_t j = 0; j < d2; ++j)
      for (std::size_t k = 0; k < d1; ++k)
        r(i, j) += m(k * d2 + i, k * d2 + j);
  return r;
}

Matrix partial_transpose(const Matrix &m, Dims dims, Subsystem which) {
  require_bipartite(m, dims, "partial_transpose");
  const auto [d1, d2] = dims;
  Matrix r(m.dim());
  for (std::size_t i1 = 0; i1 < d1; ++i1)
    for (std::size_t i2 = 0; i2 < d2; ++i2)
      for (std::size_t j1 = 0; j1 < d1; ++j1)
        for (std::size_t j2 = 0; j2 < d2; ++j2) {
          const Complex v = m(i1 * d2 + i2, j1 * d2 + j2);
          if (which == Subsystem::First)
            r(j1 * d2 + i2, i1 * d2 + j2) = v;
          else
            r(i1 * d2 + j2, j1 * d2 + i2) = v;
        }
  return r;
}

Matrix SpectralDecomposition::reconstruct() const {
  const std::size_t d = eigenvalues.size();
  Matrix r(d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        r(i, j) += eigenvalues[k] * eigenvectors[k][i] * std::conj(eigenvectors[k][j]);
  return r;
}

namespace {

constexpr double kOffDiagonalRelTol = 1e-13;
constexpr int kMaxSweeps = 100;
constexpr double kDegeneracyGap = 1e-9;
constexpr double kPhaseThreshold = 1e-12;

double off_diagonal_norm(const Matrix &a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j)
        s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Zeroes a(p,q) with the unitary U = diag(1, e*) R, R a real Givens rotation
// and e the phase of a(p,q); applies a <- U^dag a U and v <- v U.
void jacobi_rotate(Matrix &a, Matrix &v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double g = std::abs(apq);
  if (g == 0.0)
    return;
  const Complex e = apq / g;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * g);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex ec = std::conj(e);
  // Columns of U restricted to (p, q): u_p = (c, -s e*), u_q = (s, c e*).
  const Complex upp = c, uqp = -s * ec, upq = s, uqq = c * ec;
  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < n; ++r) {
    const Complex arp = a(r, p), arq = a(r, q);
    a(r, p) = arp * upp + arq * uqp;
    a(r, q) = arp * upq + arq * uqq;
    const Complex vrp = v(r, p), vrq = v(r, q);
    v(r, p) = vrp * upp + vrq * uqp;
    v(r, q) = vrp * upq + vrq * uqq;
  }
  for (std::size_t col = 0; col < n; ++col) {
    const Complex apc = a(p, col), aqc = a(q, col);
    a(p, col) = std::conj(upp) * apc + std::conj(uqp) * aqc;
    a(q, col) = std::conj(upq) * apc + std::conj(uqq) * aqc;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * g;
  a(q, q) = aqq + t * g;
}

void orthonormalize(std::vector<Ket> &vs, std::size_t begin, std::size_t end) {
  for (std::size_t k = begin; k < end; ++k) {
    for (std::size_t j = begin; j < k; ++j) {
      const Complex proj = inner(vs[j], vs[k]);
      for (std::size_t i = 0; i < vs[k].size(); ++i)
        vs[k][i] -= proj * vs[j][i];
    }
    double norm = 0.0;
    for (const auto &z : vs[k])
      norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto &z : vs[k])
      z /= norm;
  }
}

void fix_phase(Ket &v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v[i]);
    if (mag > kPhaseThreshold) {
      const Complex phase = std::conj(v[i]) / mag;
      for (auto &w : v)
        w *= phase;
      v[i] = mag;
      return;
    }
  }
}

} // namespace

SpectralDecomposition eig_hermitian(const Matrix &m, double hermitian_tol) {
  if (!is_hermitian(m, hermitian_tol))
    throw InvariantError("eig_hermitian: matrix is not Hermitian");
  const std::size_t n = m.dim();
  // Work on the exactly Hermitian part.
  Matrix a = 0.5 * (m + m.adjoint());
  Matrix v = Matrix::identity(n);
  const double scale = frobenius_norm(a);
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= kOffDiagonalRelTol * scale)
      break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() > a(y, y).real();
  });

  SpectralDecomposition out;
  out.eigenvalues.reserve(n);
  out.eigenvectors.reserve(n);
  for (std::size_t k : order) {
    out.eigenvalues.push_back(a(k, k).real());
    Ket col(n);
    for (std::size_t i = 0; i < n; ++i)
      col[i] = v(i, k);
    out.eigenvectors.push_back(std::move(col));
  }

  std::size_t begin = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k == n || out.eigenvalues[k - 1] - out.eigenvalues[k] >= kDegeneracyGap) {
      if (k - begin > 1)
        orthonormalize(out.eigenvectors, begin, k);
      begin = k;
    }
  }
  for (auto &vec : out.eigenvectors)
    fix_phase(vec);
  return out;
}

} // namespace liouville
