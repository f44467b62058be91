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

#include "liouville/liouville.hpp"
#include "liouville/superliouville.hpp"
#include "liouville/tolerances.hpp"

namespace liouville {

/// Normalized joint distribution over (first outcome, later outcome).
class JointTable {
public:
  JointTable(std::vector<std::string> rows, std::vector<std::string> cols,
             std::vector<std::vector<double>> values);

  const std::vector<std::string> &rows() const noexcept { return rows_; }
  const std::vector<std::string> &cols() const noexcept { return cols_; }
  double at(std::size_t i, std::size_t j) const { return values_.at(i).at(j); }
  const std::vector<std::vector<double>> &values() const noexcept { return values_; }

  /// P(A_i), summed from the table.
  std::vector<double> first_marginal() const;
  /// P(B_j), summed from the table.
  std::vector<double> later_marginal() const;

private:
  std::vector<std::string> rows_;
  std::vector<std::string> cols_;
  std::vector<std::vector<double>> values_;
};

/// P(A_i, B_j) = ((A_i|rho,B_j)) / sum_ij ((A_i|rho,B_j)).
JointTable joint(const Instrument &inst, const EffectSet &later, const DensityOperator &prior,
                 const Tolerances &tol = {});

/// P(A_i | rho, B_j): post-selected on the later outcome, normalized over
/// the first measurement's outcomes. The instrument need not be TP.
std::vector<double> interdictive(const Instrument &inst, const Effect &later_outcome,
                                 const DensityOperator &prior, const Tolerances &tol = {});

/// P(B_j | rho, A_i): normalized over the later measurement's outcomes.
std::vector<double> predictive(const OutcomeChannel &first_outcome, const EffectSet &later,
                               const DensityOperator &prior, const Tolerances &tol = {});

/// State after outcome A_i: sum_chi chi Lambda rho Lambda^dag, renormalized
/// to unit trace.
DensityOperator post_state(const OutcomeChannel &first_outcome, const DensityOperator &prior,
                           const Tolerances &tol = {});

/// Retrodiction: interdictive probabilities with a maximally mixed prior,
/// i.e. which first outcome is implied by the later one alone.
std::vector<double> retrodict(const Instrument &inst, const Effect &later_outcome,
                              const Tolerances &tol = {});

} // namespace liouville
