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
#include "liouville/liouville.hpp"
#include "liouville/tolerances.hpp"

namespace liouville {

/// Kraus operators of one measurement outcome.
class KrausSet {
public:
  /// Throws InvariantError when empty, DimensionError on mixed shapes.
  explicit KrausSet(std::vector<Matrix> operators);

  const std::vector<Matrix> &operators() const noexcept { return operators_; }
  std::size_t dim() const noexcept { return operators_.front().dim(); }
  std::size_t size() const noexcept { return operators_.size(); }

private:
  std::vector<Matrix> operators_;
};

/// Vector |lambda) on H (x) H~ of a Kraus operator: component m*d + k is
/// A(k, m), input index slow and output index fast.
Ket kraus_vector(const Matrix &a);
/// Inverse of kraus_vector.
Matrix kraus_operator(const Ket &lambda);

/// The map of one measurement outcome, stored as its choi matrix
/// C = sum_chi chi |lambda_chi)(lambda_chi| over H (x) H~.
///
/// Index convention: C((m, k), (n, l)) with m, n inputs and k, l outputs,
/// flattened as m*d + k. For the identity on a qubit this gives
///
///     C = |00)(00| + |00)(11| + |11)(00| + |11)(11|,
///
/// i.e. unit entries at (0,0), (0,3), (3,0), (3,3). The map acts as
/// E(X)(k, l) = sum_{m,n} C((m,k),(n,l)) X(m, n).
///
/// The spectrum is computed once at construction.
class OutcomeChannel {
public:
  /// Validated construction from a choi matrix; throws InvariantError if
  /// not Hermitian and CpViolation if not PSD within tol.cp.
  static OutcomeChannel from_choi(Matrix choi, const Tolerances &tol = {});

  /// Bypasses the CP check. Only raw_overlap and the diagnostics accept the
  /// result when it is not CP.
  static OutcomeChannel unvalidated(Matrix choi, const Tolerances &tol = {});

  std::size_t dim() const noexcept { return dim_; }
  const Matrix &choi() const noexcept { return choi_; }
  const SpectralDecomposition &spectrum() const noexcept { return spectrum_; }

private:
  OutcomeChannel(Matrix choi, double hermitian_tol);

  std::size_t dim_;
  Matrix choi_;
  SpectralDecomposition spectrum_;
};

/// Ordered, labelled outcome channels of one measurement.
class Instrument {
public:
  /// Labels default to A0, A1, ... When `trace_preserving` is set the sum
  /// of contractions must equal the identity (InvariantError otherwise).
  Instrument(std::vector<OutcomeChannel> outcomes, std::vector<std::string> labels = {},
             bool trace_preserving = false, const Tolerances &tol = {});

  const std::vector<OutcomeChannel> &outcomes() const noexcept { return outcomes_; }
  const std::vector<std::string> &labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return outcomes_.size(); }
  std::size_t dim() const noexcept { return outcomes_.front().dim(); }
  bool declared_trace_preserving() const noexcept { return trace_preserving_; }

  std::size_t index_of(const std::string &label) const;

private:
  std::vector<OutcomeChannel> outcomes_;
  std::vector<std::string> labels_;
  bool trace_preserving_;
};

struct CpReport {
  bool cp;
  double min_eigenvalue;
};

OutcomeChannel from_kraus(const KrausSet &k);

/// Kraus operators sqrt(chi) * kraus_operator(v_chi) for eigenvalues above
/// 1e-12 of the spectrum sum. Throws CpViolation if the choi is not PSD.
KrausSet to_kraus(const OutcomeChannel &c, const Tolerances &tol = {});

OutcomeChannel identity_channel(std::size_t dim);

/// The (unphysical) transpose map X -> X^T. For dim 2 the choi is SWAP.
OutcomeChannel transpose_channel(std::size_t dim);

/// True iff min eigenvalue >= -tol.cp * max(1, max eigenvalue).
CpReport is_cp(const OutcomeChannel &c, const Tolerances &tol = {});

/// sum_chi chi Lambda^dag Lambda, the effect of the outcome when nothing
/// is measured afterwards.
Matrix contraction(const OutcomeChannel &c);

/// Contraction <= I within tol.tp.
bool is_trace_nonincreasing(const OutcomeChannel &c, const Tolerances &tol = {});

/// sum over outcomes of the contraction equals I within tol.tp.
bool is_tp(const Instrument &inst, const Tolerances &tol = {});

/// Applies the map to an operator.
Matrix apply(const OutcomeChannel &c, const Matrix &x);

/// ((A | rho, B)) = sum_chi chi Tr(Lambda rho Lambda^dag B). Rejects non-CP
/// channels with CpViolation.
double overlap(const OutcomeChannel &c, const DensityOperator &prior, const Effect &later,
               const Tolerances &tol = {});

/// Same contraction with no physicality gate; accepts arbitrary operators
/// and may return negative values.
double raw_overlap(const OutcomeChannel &c, const Matrix &prior, const Matrix &later);

/// The map c (x) id on system (x) ancilla, composite index system-major.
OutcomeChannel extend_with_identity(const OutcomeChannel &c, std::size_t ancilla_dim);

/// sum_chi chi Lambda^dag B Lambda, so that Tr(rho * result) equals
/// overlap(first, rho, later).
Effect two_outcome_effect(const OutcomeChannel &first, const Effect &later,
                          const Tolerances &tol = {});

/// Throws CpViolation naming `where` when c is not CP.
void require_cp(const OutcomeChannel &c, const Tolerances &tol, const char *where);

} // namespace liouville
