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

#include <array>

#include "liouville/linalg.hpp"
#include "liouville/liouville.hpp"
#include "liouville/superliouville.hpp"
#include "liouville/tolerances.hpp"

namespace liouville::scenarios {

// --- BB84 -----------------------------------------------------------------

/// Eve's single-qubit attack on BB84. attack_kraus.operators()[e] is the
/// Kraus operator of her outcome "bit = e".
struct BB84Report {
  KrausSet attack_kraus;
  double p_all_agree; ///< P(A = E = B)
  double p_ab_agree;  ///< P(A = B) on sifted bits
  double p_cond;      ///< P(A = E = B | A = B)
  bool tp_verified;

  double disagreement() const { return 1.0 - p_ab_agree; }
};

/// BB84 signal state for (basis, bit); basis 0 is {|0>,|1>}, basis 1 is
/// {|+>,|->}.
Ket bb84_state(int basis, int bit);

/// Hermitian operator over H (x) H~ whose expectation in |lambda) is the
/// summed success weight of a Kraus vector for `bit`:
/// sum over bases of |(w_s | lambda)|^2 with w_s = conj(psi_s) (x) psi_s.
Matrix bb84_agreement_operator(int bit);

/// Statistics of an attack, assembled from joint tables over the four
/// (basis, bit) preparations with weight 1/4 each.
BB84Report bb84_statistics(const KrausSet &attack, const Tolerances &tol = {});

/// 1/4 sum_e (lambda_e| M_e |lambda_e), the optimization objective.
double bb84_objective(const KrausSet &attack);

/// Swap the roles of the two bases (0 <-> +, 1 <-> -) by Hadamard
/// conjugation of every Kraus operator.
KrausSet relabel_bases(const KrausSet &attack);

/// Eve's attack maximizing P(A = E = B): each Kraus vector is the top
/// eigenvector of bb84_agreement_operator(bit).
BB84Report bb84_optimal_agreement(const Tolerances &tol = {});

/// The attack that makes Eve certain on every bit Alice and Bob agree on,
/// at the cost of a 1/3 error rate.
BB84Report bb84_fpb(const Tolerances &tol = {});

/// {|0_B>, |1_B>}, the basis rotated by pi/8 from the computational one.
std::array<Ket, 2> breidtbart_basis();

/// The same attack built from a probe: a CNOT controlled in the
/// Breidtbart basis, probe prepared in ((1+sqrt2)|0> + (1-sqrt2)|1>)/sqrt6
/// and read out in the computational basis; A_i = <i|U|probe>.
Instrument fpb_probe_instrument(const Tolerances &tol = {});

// --- Quantum eraser -------------------------------------------------------

struct EraserPoint {
  double phi;
  Matrix probe_basis; ///< rows are bras: probe_basis(i, j) = <v_i|j>
  /// P(+|A0), P(-|A0), P(+|A1), P(-|A1)
  std::array<double, 4> conditionals;
};

/// (|0> + e^{i phi}|1>)(h.c.)/2
DensityOperator eraser_state(double phi);

/// The which-path decoherence map: |0><0|, |1><1| kept, coherences killed.
OutcomeChannel decoherence_channel();

/// Probe outcome channels A_i = v_i0 |0><0| + v_i1 |1><1|.
/// Throws InvariantError if the basis is not unitary within 1e-10.
Instrument eraser_instrument(const Matrix &probe_basis);

/// Conditional fringes after the probe is read out in `probe_basis`.
EraserPoint eraser_run(double phi, const Matrix &probe_basis, const Tolerances &tol = {});

/// ((E | rho_phi, +)): the decohered probability of '+', with no probe
/// readout to condition on.
double eraser_unconditioned(double phi, const Tolerances &tol = {});

/// Probe bases used by the CLI.
Matrix plus_minus_basis();
Matrix computational_basis();
/// Real rotation: rows (cos t, sin t) and (-sin t, cos t).
Matrix rotated_basis(double theta);

// --- Partial transposition -------------------------------------------------

struct PTransposeReport {
  double raw_overlap;      ///< ((T, I | Phi+, Psi-))
  double identity_overlap; ///< same with the identity in place of T
  CpReport transpose_cp;   ///< is_cp(transpose_channel(2))
  CpReport extended_cp;    ///< is_cp of the extended map (T, I)
};

Ket bell_phi_plus();
Ket bell_psi_minus();

PTransposeReport ptranspose_demo(const Tolerances &tol = {});

} // namespace liouville::scenarios
