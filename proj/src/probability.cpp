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

#include "liouville/probability.hpp"

#include <string>

#include "detail.hpp"
#include "liouville/errors.hpp"

namespace liouville {

namespace {

void require_dim(std::size_t a, std::size_t b, const char *where) {
  if (a != b)
    throw DimensionError(std::string(where) + ": dimension mismatch");
}

std::vector<double> normalize(std::vector<double> weights, const Tolerances &tol,
                              const char *where) {
  double total = 0.0;
  for (double w : weights)
    total += w;
  if (total <= tol.zero)
    throw ZeroDenominator(std::string(where) + ": conditioning event has zero probability");
  for (double &w : weights)
    w = detail::clamp_probability(w / total, where);
  return weights;
}

} // namespace

JointTable::JointTable(std::vector<std::string> rows, std::vector<std::string> cols,
                       std::vector<std::vector<double>> values)
    : rows_(std::move(rows)), cols_(std::move(cols)), values_(std::move(values)) {
  if (values_.size() != rows_.size())
    throw DimensionError("JointTable: row count mismatch");
  for (const auto &r : values_)
    if (r.size() != cols_.size())
      throw DimensionError("JointTable: column count mismatch");
}

std::vector<double> JointTable::first_marginal() const {
  std::vector<double> m(rows_.size(), 0.0);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (double v : values_[i])
      m[i] += v;
  return m;
}

std::vector<double> JointTable::later_marginal() const {
  std::vector<double> m(cols_.size(), 0.0);
  for (const auto &r : values_)
    for (std::size_t j = 0; j < r.size(); ++j)
      m[j] += r[j];
  return m;
}

JointTable joint(const Instrument &inst, const EffectSet &later, const DensityOperator &prior,
                 const Tolerances &tol) {
  require_dim(inst.dim(), prior.dim(), "joint");
  require_dim(later.dim(), prior.dim(), "joint");
  for (const auto &c : inst.outcomes())
    require_cp(c, tol, "joint");

  std::vector<std::vector<double>> raw(inst.size(), std::vector<double>(later.size()));
  double total = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i)
    for (std::size_t j = 0; j < later.size(); ++j) {
      raw[i][j] = raw_overlap(inst.outcomes()[i], prior.mat(), later.effects()[j].mat());
      total += raw[i][j];
    }
  if (total <= tol.zero)
    throw ZeroDenominator("joint: all overlaps vanish");
  for (auto &row : raw)
    for (double &v : row)
      v = detail::clamp_probability(v / total, "joint");
  return JointTable(inst.labels(), later.labels(), std::move(raw));
}

std::vector<double> interdictive(const Instrument &inst, const Effect &later_outcome,
                                 const DensityOperator &prior, const Tolerances &tol) {
  require_dim(inst.dim(), prior.dim(), "interdictive");
  require_dim(later_outcome.dim(), prior.dim(), "interdictive");
  std::vector<double> w;
  w.reserve(inst.size());
  for (const auto &c : inst.outcomes())
    w.push_back(overlap(c, prior, later_outcome, tol));
  return normalize(std::move(w), tol, "interdictive");
}

std::vector<double> predictive(const OutcomeChannel &first_outcome, const EffectSet &later,
                               const DensityOperator &prior, const Tolerances &tol) {
  require_dim(first_outcome.dim(), prior.dim(), "predictive");
  require_dim(later.dim(), prior.dim(), "predictive");
  require_cp(first_outcome, tol, "predictive");
  std::vector<double> w;
  w.reserve(later.size());
  for (const auto &b : later.effects())
    w.push_back(raw_overlap(first_outcome, prior.mat(), b.mat()));
  return normalize(std::move(w), tol, "predictive");
}

DensityOperator post_state(const OutcomeChannel &first_outcome, const DensityOperator &prior,
                           const Tolerances &tol) {
  require_dim(first_outcome.dim(), prior.dim(), "post_state");
  require_cp(first_outcome, tol, "post_state");
  Matrix out = apply(first_outcome, prior.mat());
  const double p = out.trace().real();
  if (p <= tol.zero)
    throw ZeroDenominator("post_state: outcome has zero probability under the prior");
  out *= 1.0 / p;
  // Restore exact Hermiticity lost to rounding.
  out = 0.5 * (out + out.adjoint());
  return DensityOperator(std::move(out), tol);
}

std::vector<double> retrodict(const Instrument &inst, const Effect &later_outcome,
                              const Tolerances &tol) {
  return interdictive(inst, later_outcome, DensityOperator::maximally_mixed(inst.dim()), tol);
}

} // namespace liouville
