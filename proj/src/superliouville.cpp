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

#include "liouville/superliouville.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

std::size_t channel_dim(const Matrix &choi) {
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(choi.dim()))));
  if (d * d != choi.dim())
    throw DimensionError("choi dimension " + std::to_string(choi.dim()) +
                         " is not a square d*d");
  return d;
}

void require_dims(const OutcomeChannel &c, std::size_t d, const char *where) {
  if (c.dim() != d)
    throw DimensionError(std::string(where) + ": channel acts on dimension " +
                         std::to_string(c.dim()) + ", operand has " + std::to_string(d));
}

} // namespace

KrausSet::KrausSet(std::vector<Matrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty())
    throw InvariantError("KrausSet: empty");
  for (const auto &a : operators_)
    if (a.dim() != operators_.front().dim())
      throw DimensionError("KrausSet: operators differ in shape");
}

Ket kraus_vector(const Matrix &a) {
  const std::size_t d = a.dim();
  Ket v(d * d);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t k = 0; k < d; ++k)
      v[m * d + k] = a(k, m);
  return v;
}

Matrix kraus_operator(const Ket &lambda) {
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(lambda.size()))));
  if (d == 0 || d * d != lambda.size())
    throw DimensionError("kraus_operator: length is not a perfect square");
  Matrix a(d);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t k = 0; k < d; ++k)
      a(k, m) = lambda[m * d + k];
  return a;
}

OutcomeChannel::OutcomeChannel(Matrix choi, double hermitian_tol)
    : dim_(channel_dim(choi)), choi_(std::move(choi)),
      spectrum_(eig_hermitian(choi_, hermitian_tol)) {}

OutcomeChannel OutcomeChannel::from_choi(Matrix choi, const Tolerances &tol) {
  OutcomeChannel c(std::move(choi), tol.hermitian);
  require_cp(c, tol, "OutcomeChannel::from_choi");
  return c;
}

OutcomeChannel OutcomeChannel::unvalidated(Matrix choi, const Tolerances &tol) {
  return OutcomeChannel(std::move(choi), tol.hermitian);
}

Instrument::Instrument(std::vector<OutcomeChannel> outcomes, std::vector<std::string> labels,
                       bool trace_preserving, const Tolerances &tol)
    : outcomes_(std::move(outcomes)), labels_(std::move(labels)),
      trace_preserving_(trace_preserving) {
  if (outcomes_.empty())
    throw InvariantError("Instrument: no outcomes");
  for (const auto &c : outcomes_)
    if (c.dim() != outcomes_.front().dim())
      throw DimensionError("Instrument: outcomes differ in dimension");
  if (labels_.empty())
    for (std::size_t i = 0; i < outcomes_.size(); ++i)
      labels_.push_back("A" + std::to_string(i));
  if (labels_.size() != outcomes_.size())
    throw InvariantError("Instrument: label count does not match outcome count");
  if (trace_preserving_ && !is_tp(*this, tol))
    throw InvariantError("Instrument: declared trace-preserving but sum A^dag A != I");
}

std::size_t Instrument::index_of(const std::string &label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label)
      return i;
  throw InvariantError("Instrument: no outcome labelled '" + label + "'");
}

void require_cp(const OutcomeChannel &c, const Tolerances &tol, const char *where) {
  const auto report = is_cp(c, tol);
  if (!report.cp)
    throw CpViolation(std::string(where) + ": map is not completely positive (min choi eigenvalue " +
                          std::to_string(report.min_eigenvalue) + ")",
                      report.min_eigenvalue);
}

OutcomeChannel from_kraus(const KrausSet &k) {
  const std::size_t d = k.dim();
  Matrix choi(d * d);
  for (const auto &a : k.operators())
    choi += projector(kraus_vector(a));
  return OutcomeChannel::unvalidated(std::move(choi));
}

KrausSet to_kraus(const OutcomeChannel &c, const Tolerances &tol) {
  require_cp(c, tol, "to_kraus");
  const auto &spec = c.spectrum();
  double total = 0.0;
  for (double chi : spec.eigenvalues)
    total += chi;
  const double cutoff = 1e-12 * total;
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    const double chi = spec.eigenvalues[i];
    if (chi <= cutoff)
      continue;
    Matrix a = kraus_operator(spec.eigenvectors[i]);
    a *= std::sqrt(chi);
    ops.push_back(std::move(a));
  }
  if (ops.empty())
    ops.push_back(Matrix(c.dim()));
  return KrausSet(std::move(ops));
}

OutcomeChannel identity_channel(std::size_t dim) {
  return from_kraus(KrausSet({Matrix::identity(dim)}));
}

OutcomeChannel transpose_channel(std::size_t dim) {
  Matrix choi(dim * dim);
  for (std::size_t m = 0; m < dim; ++m)
    for (std::size_t k = 0; k < dim; ++k)
      choi(m * dim + k, k * dim + m) = 1.0;
  return OutcomeChannel::unvalidated(std::move(choi));
}

CpReport is_cp(const OutcomeChannel &c, const Tolerances &tol) {
  const auto &spec = c.spectrum();
  const double lo = spec.min_eigenvalue();
  const double hi = spec.max_eigenvalue();
  return {lo >= -tol.cp * std::max(1.0, hi), lo};
}

Matrix contraction(const OutcomeChannel &c) {
  const std::size_t d = c.dim();
  const Matrix &choi = c.choi();
  Matrix r(d);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n)
      for (std::size_t k = 0; k < d; ++k)
        r(n, m) += choi(m * d + k, n * d + k);
  return r;
}

bool is_trace_nonincreasing(const OutcomeChannel &c, const Tolerances &tol) {
  const Matrix slack = Matrix::identity(c.dim()) - contraction(c);
  return eig_hermitian(slack, std::max(tol.hermitian, tol.tp)).min_eigenvalue() >= -tol.tp;
}

bool is_tp(const Instrument &inst, const Tolerances &tol) {
  Matrix total(inst.dim());
  for (const auto &c : inst.outcomes())
    total += contraction(c);
  return max_abs_diff(total, Matrix::identity(inst.dim())) <= tol.tp;
}

Matrix apply(const OutcomeChannel &c, const Matrix &x) {
  const std::size_t d = c.dim();
  require_dims(c, x.dim(), "apply");
  const Matrix &choi = c.choi();
  Matrix r(d);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) {
      const Complex xmn = x(m, n);
      if (xmn == Complex{})
        continue;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          r(k, l) += choi(m * d + k, n * d + l) * xmn;
    }
  return r;
}

double raw_overlap(const OutcomeChannel &c, const Matrix &prior, const Matrix &later) {
  const std::size_t d = c.dim();
  require_dims(c, prior.dim(), "raw_overlap");
  require_dims(c, later.dim(), "raw_overlap");
  const Matrix &choi = c.choi();
  // Tr(C (rho^T (x) B)) = sum C((m,k),(n,l)) rho(m,n) B(l,k)
  Complex s = 0.0;
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) {
      const Complex rmn = prior(m, n);
      if (rmn == Complex{})
        continue;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          s += choi(m * d + k, n * d + l) * rmn * later(l, k);
    }
  return s.real();
}

double overlap(const OutcomeChannel &c, const DensityOperator &prior, const Effect &later,
               const Tolerances &tol) {
  require_cp(c, tol, "overlap");
  return raw_overlap(c, prior.mat(), later.mat());
}

OutcomeChannel extend_with_identity(const OutcomeChannel &c, std::size_t ancilla_dim) {
  const std::size_t d = c.dim();
  const std::size_t a = ancilla_dim;
  const std::size_t big = d * a;
  const Matrix &choi = c.choi();
  Matrix out(big * big);
  for (std::size_t ms = 0; ms < d; ++ms)
    for (std::size_t ks = 0; ks < d; ++ks)
      for (std::size_t ns = 0; ns < d; ++ns)
        for (std::size_t ls = 0; ls < d; ++ls) {
          const Complex v = choi(ms * d + ks, ns * d + ls);
          if (v == Complex{})
            continue;
          for (std::size_t ma = 0; ma < a; ++ma)
            for (std::size_t na = 0; na < a; ++na) {
              const std::size_t in_row = ms * a + ma, out_row = ks * a + ma;
              const std::size_t in_col = ns * a + na, out_col = ls * a + na;
              out(in_row * big + out_row, in_col * big + out_col) = v;
            }
        }
  return OutcomeChannel::unvalidated(std::move(out));
}

Effect two_outcome_effect(const OutcomeChannel &first, const Effect &later,
                          const Tolerances &tol) {
  require_cp(first, tol, "two_outcome_effect");
  const std::size_t d = first.dim();
  require_dims(first, later.dim(), "two_outcome_effect");
  const Matrix &choi = first.choi();
  const Matrix &b = later.mat();
  Matrix r(d);
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          r(n, m) += choi(m * d + k, n * d + l) * b(l, k);
  return Effect(std::move(r), tol);
}

} // namespace liouville
