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

#include "liouville/liouville.hpp"

#include <cmath>
#include <string>

#include <spdlog/spdlog.h>

#include "detail.hpp"
#include "liouville/errors.hpp"

namespace liouville {

namespace detail {

double clamp_probability(double p, std::string_view where) {
  constexpr double band = 1e-12;
  if (p >= 0.0 && p <= 1.0)
    return p;
  if (p < -band || p > 1.0 + band || std::isnan(p))
    throw NumericalError(std::string(where) + ": probability " + std::to_string(p) +
                         " outside [0, 1]");
  spdlog::debug("{}: clamped probability {:.3e}", where, p);
  return p < 0.0 ? 0.0 : 1.0;
}

} // namespace detail

namespace {

std::size_t exact_sqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  return r * r == n ? r : 0;
}

} // namespace

LVector::LVector(std::vector<Complex> amplitudes)
    : op_dim_(exact_sqrt(amplitudes.size())), amplitudes_(std::move(amplitudes)) {
  if (op_dim_ == 0)
    throw DimensionError("LVector: length " + std::to_string(amplitudes_.size()) +
                         " is not a nonzero perfect square");
}

LVector vectorize(const Matrix &m) {
  return LVector(std::vector<Complex>(m.entries().begin(), m.entries().end()));
}

Matrix devectorize(const LVector &v) { return Matrix(v.op_dim(), v.amplitudes()); }

Complex linner(const LVector &a, const LVector &b) {
  if (a.op_dim() != b.op_dim())
    throw DimensionError("linner: operator dimension mismatch");
  Complex s = 0.0;
  const auto &x = a.amplitudes();
  const auto &y = b.amplitudes();
  for (std::size_t k = 0; k < x.size(); ++k)
    s += std::conj(x[k]) * y[k];
  return s;
}

Complex linner(const Matrix &a, const Matrix &b) { return linner(vectorize(a), vectorize(b)); }

DensityOperator::DensityOperator(Matrix mat, const Tolerances &tol) : mat_(std::move(mat)) {
  if (!is_hermitian(mat_, tol.hermitian))
    throw InvariantError("DensityOperator: not Hermitian");
  const auto spec = eig_hermitian(mat_, tol.hermitian);
  if (spec.min_eigenvalue() < -tol.psd)
    throw InvariantError("DensityOperator: negative eigenvalue " +
                         std::to_string(spec.min_eigenvalue()));
  const double tr = mat_.trace().real();
  if (!(tr > 0.0) || tr > 1.0 + tol.trace)
    throw InvariantError("DensityOperator: trace " + std::to_string(tr) + " not in (0, 1]");
}

DensityOperator DensityOperator::pure(const Ket &psi) {
  double norm = 0.0;
  for (const auto &z : psi)
    norm += std::norm(z);
  if (!(norm > 0.0))
    throw InvariantError("DensityOperator::pure: zero vector");
  Matrix p = projector(psi);
  p *= 1.0 / norm;
  return DensityOperator(std::move(p));
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  Matrix m = Matrix::identity(dim);
  m *= 1.0 / static_cast<double>(dim);
  return DensityOperator(std::move(m));
}

Effect::Effect(Matrix mat, const Tolerances &tol) : mat_(std::move(mat)) {
  if (!is_hermitian(mat_, tol.hermitian))
    throw InvariantError("Effect: not Hermitian");
  const auto spec = eig_hermitian(mat_, tol.hermitian);
  if (spec.min_eigenvalue() < -tol.psd || spec.max_eigenvalue() > 1.0 + tol.psd)
    throw InvariantError("Effect: spectrum outside [0, 1]");
}

EffectSet::EffectSet(std::vector<Effect> effects, bool complete, std::vector<std::string> labels,
                     const Tolerances &tol)
    : effects_(std::move(effects)), labels_(std::move(labels)), complete_(complete) {
  if (effects_.empty())
    throw InvariantError("EffectSet: empty");
  for (const auto &e : effects_)
    if (e.dim() != effects_.front().dim())
      throw DimensionError("EffectSet: effects differ in dimension");
  if (labels_.empty())
    for (std::size_t i = 0; i < effects_.size(); ++i)
      labels_.push_back("B" + std::to_string(i));
  if (labels_.size() != effects_.size())
    throw InvariantError("EffectSet: label count does not match effect count");
  if (complete_ && max_abs_diff(sum(), Matrix::identity(dim())) > tol.trace)
    throw InvariantError("EffectSet: flagged complete but effects do not sum to identity");
}

Matrix EffectSet::sum() const {
  Matrix s(dim());
  for (const auto &e : effects_)
    s += e.mat();
  return s;
}

std::size_t EffectSet::index_of(const std::string &label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label)
      return i;
  throw InvariantError("EffectSet: no effect labelled '" + label + "'");
}

double born(const Effect &outcome, const DensityOperator &prior, const EffectSet &context,
            const Tolerances &tol) {
  if (outcome.dim() != prior.dim() || context.dim() != prior.dim())
    throw DimensionError("born: dimension mismatch");
  const double numerator = linner(outcome.mat(), prior.mat()).real();
  const double denominator = linner(context.sum(), prior.mat()).real();
  if (denominator <= tol.zero)
    throw ZeroDenominator("born: normalization <<A|r>> vanishes");
  return detail::clamp_probability(numerator / denominator, "born");
}

} // namespace liouville
