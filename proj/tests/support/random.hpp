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

// Seeded random generators for property tests. Independent of the library's
// eigensolver so that generated inputs do not depend on the code under test.

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "liouville/linalg.hpp"

namespace liouville::testing {

using Rng = std::mt19937_64;

inline Complex gaussian_complex(Rng &rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

inline Matrix random_matrix(std::size_t d, Rng &rng) {
  Matrix m(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m(i, j) = gaussian_complex(rng);
  return m;
}

inline Matrix random_hermitian(std::size_t d, Rng &rng) {
  Matrix x = random_matrix(d, rng);
  return 0.5 * (x + x.adjoint());
}

/// X X^dag / Tr(X X^dag): PSD with unit trace.
inline Matrix random_density(std::size_t d, Rng &rng) {
  Matrix x = random_matrix(d, rng);
  Matrix r = x * x.adjoint();
  r *= 1.0 / r.trace().real();
  return 0.5 * (r + r.adjoint());
}

/// PSD with trace (hence spectrum) at most 1.
inline Matrix random_effect(std::size_t d, Rng &rng) {
  std::uniform_real_distribution<double> u(0.1, 1.0);
  Matrix r = random_density(d, rng);
  r *= u(rng);
  return r;
}

/// Haar-ish unitary by Gram-Schmidt on Gaussian columns.
inline Matrix random_unitary(std::size_t d, Rng &rng) {
  std::vector<Ket> cols;
  for (std::size_t k = 0; k < d; ++k) {
    Ket v(d);
    for (auto &z : v)
      z = gaussian_complex(rng);
    for (const auto &c : cols) {
      Complex p = 0.0;
      for (std::size_t i = 0; i < d; ++i)
        p += std::conj(c[i]) * v[i];
      for (std::size_t i = 0; i < d; ++i)
        v[i] -= p * c[i];
    }
    double n = 0.0;
    for (const auto &z : v)
      n += std::norm(z);
    n = std::sqrt(n);
    for (auto &z : v)
      z /= n;
    cols.push_back(std::move(v));
  }
  Matrix u(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      u(i, j) = cols[j][i];
  return u;
}

/// `n` Kraus operators with sum A^dag A = I: the d x d blocks of the first
/// block column of a random (n d) x (n d) unitary.
inline std::vector<Matrix> random_tp_kraus(std::size_t d, std::size_t n, Rng &rng) {
  const Matrix u = random_unitary(n * d, rng);
  std::vector<Matrix> ops;
  for (std::size_t b = 0; b < n; ++b) {
    Matrix a(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        a(i, j) = u(b * d + i, j);
    ops.push_back(std::move(a));
  }
  return ops;
}

inline Ket random_ket(std::size_t d, Rng &rng) {
  Ket v(d);
  for (auto &z : v)
    z = gaussian_complex(rng);
  return v;
}

} // namespace liouville::testing
