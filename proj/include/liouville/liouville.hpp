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

#include <cstddef>
#include <string>
#include <vector>

#include "liouville/linalg.hpp"
#include "liouville/tolerances.hpp"

namespace liouville {

/// An operator viewed as a vector in Liouville space. Amplitude i*d + j is
/// the coefficient of |i j^dag>>, i.e. of |i><j|.
class LVector {
public:
  /// Throws DimensionError unless the length is a nonzero perfect square.
  explicit LVector(std::vector<Complex> amplitudes);

  std::size_t op_dim() const noexcept { return op_dim_; }
  const std::vector<Complex> &amplitudes() const noexcept { return amplitudes_; }

  friend bool operator==(const LVector &, const LVector &) = default;

private:
  std::size_t op_dim_;
  std::vector<Complex> amplitudes_;
};

LVector vectorize(const Matrix &m);
Matrix devectorize(const LVector &v);

/// <<a|b>> = Tr(A^dag B). Throws DimensionError on mismatched op_dim.
Complex linner(const LVector &a, const LVector &b);
/// Convenience overload on operators.
Complex linner(const Matrix &a, const Matrix &b);

/// Hermitian PSD operator with 0 < trace <= 1. Sub-normalized priors are
/// legal; normalization is always applied explicitly by the probability
/// rules.
class DensityOperator {
public:
  explicit DensityOperator(Matrix mat, const Tolerances &tol = {});

  /// (|psi><psi|) with psi normalized first.
  static DensityOperator pure(const Ket &psi);
  static DensityOperator maximally_mixed(std::size_t dim);

  const Matrix &mat() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.dim(); }

private:
  Matrix mat_;
};

/// POVM element: Hermitian with spectrum in [0, 1].
class Effect {
public:
  explicit Effect(Matrix mat, const Tolerances &tol = {});

  const Matrix &mat() const noexcept { return mat_; }
  std::size_t dim() const noexcept { return mat_.dim(); }

private:
  Matrix mat_;
};

/// Ordered, labelled set of effects. A set flagged complete sums to the
/// identity; an incomplete set is a legitimate measurement context too.
class EffectSet {
public:
  /// Labels default to B0, B1, ... when empty.
  EffectSet(std::vector<Effect> effects, bool complete, std::vector<std::string> labels = {},
            const Tolerances &tol = {});

  const std::vector<Effect> &effects() const noexcept { return effects_; }
  const std::vector<std::string> &labels() const noexcept { return labels_; }
  bool complete() const noexcept { return complete_; }
  std::size_t size() const noexcept { return effects_.size(); }
  std::size_t dim() const noexcept { return effects_.front().dim(); }

  /// Sum of all effects, the vector |A>> whose overlap with the prior
  /// normalizes single-measurement probabilities.
  Matrix sum() const;

  /// Index of `label`; throws InvariantError when absent.
  std::size_t index_of(const std::string &label) const;

private:
  std::vector<Effect> effects_;
  std::vector<std::string> labels_;
  bool complete_;
};

/// Single-measurement probability P = <<E|r>> / <<sum(context)|r>>.
/// Throws ZeroDenominator when the normalization vanishes.
double born(const Effect &outcome, const DensityOperator &prior, const EffectSet &context,
            const Tolerances &tol = {});

} // namespace liouville
