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

#include "liouville/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "liouville/errors.hpp"
#include "liouville/probability.hpp"

namespace liouville::scenarios {

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

Matrix controlled_not(const std::array<Ket, 2> &control_basis) {
  const Matrix x{{0.0, 1.0}, {1.0, 0.0}};
  return kron(projector(control_basis[0]), Matrix::identity(2)) +
         kron(projector(control_basis[1]), x);
}

// Kraus operator on the signal for probe prepared in `probe_in` and found
// in the state whose bra components are probe_bra[q] = <v|q>:
// A(s', s) = sum_{q, r} <v|q> U((s', q), (s, r)) probe_in[r].
Matrix probe_kraus(const Matrix &u, const Ket &probe_in, const Ket &probe_bra) {
  Matrix a(2);
  for (std::size_t so = 0; so < 2; ++so)
    for (std::size_t si = 0; si < 2; ++si)
      for (std::size_t q = 0; q < 2; ++q)
        for (std::size_t r = 0; r < 2; ++r)
          a(so, si) += probe_bra[q] * u(so * 2 + q, si * 2 + r) * probe_in[r];
  return a;
}

Matrix hadamard() { return Matrix{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}; }

} // namespace

Ket bb84_state(int basis, int bit) {
  if (basis == 0)
    return bit == 0 ? Ket{1.0, 0.0} : Ket{0.0, 1.0};
  return bit == 0 ? Ket{kInvSqrt2, kInvSqrt2} : Ket{kInvSqrt2, -kInvSqrt2};
}

Matrix bb84_agreement_operator(int bit) {
  Matrix m(4);
  for (int basis = 0; basis < 2; ++basis) {
    const Ket psi = bb84_state(basis, bit);
    Ket conj_psi = psi;
    for (auto &z : conj_psi)
      z = std::conj(z);
    m += projector(kron(conj_psi, psi));
  }
  return m;
}

double bb84_objective(const KrausSet &attack) {
  double total = 0.0;
  for (int bit = 0; bit < 2; ++bit) {
    const Ket lambda = kraus_vector(attack.operators().at(bit));
    total += inner(lambda, bb84_agreement_operator(bit) * lambda).real();
  }
  return 0.25 * total;
}

BB84Report bb84_statistics(const KrausSet &attack, const Tolerances &tol) {
  if (attack.size() != 2 || attack.dim() != 2)
    throw DimensionError("bb84_statistics: expected two qubit Kraus operators");
  std::vector<OutcomeChannel> outcomes;
  for (const auto &a : attack.operators())
    outcomes.push_back(from_kraus(KrausSet({a})));
  const Instrument eve(std::move(outcomes), {"E0", "E1"});

  double all_agree = 0.0, ab_agree = 0.0;
  for (int basis = 0; basis < 2; ++basis) {
    const EffectSet bob({Effect(projector(bb84_state(basis, 0)), tol),
                         Effect(projector(bb84_state(basis, 1)), tol)},
                        true, {"B0", "B1"}, tol);
    for (int bit = 0; bit < 2; ++bit) {
      const auto table = joint(eve, bob, DensityOperator::pure(bb84_state(basis, bit)), tol);
      const auto b = static_cast<std::size_t>(bit);
      all_agree += 0.25 * table.at(b, b);
      ab_agree += 0.25 * (table.at(0, b) + table.at(1, b));
    }
  }
  if (ab_agree <= tol.zero)
    throw ZeroDenominator("bb84_statistics: Alice and Bob never agree");
  return BB84Report{attack, all_agree, ab_agree, all_agree / ab_agree, is_tp(eve, tol)};
}

KrausSet relabel_bases(const KrausSet &attack) {
  const Matrix h = hadamard();
  std::vector<Matrix> ops;
  for (const auto &a : attack.operators())
    ops.push_back(h * a * h);
  return KrausSet(std::move(ops));
}

BB84Report bb84_optimal_agreement(const Tolerances &tol) {
  constexpr double kMinGap = 1e-6;
  std::vector<Matrix> ops;
  for (int bit = 0; bit < 2; ++bit) {
    const auto spec = eig_hermitian(bb84_agreement_operator(bit));
    // The '+' superposition carries the largest eigenvalue; a closed gap
    // would make the choice arbitrary.
    if (spec.eigenvalues[0] - spec.eigenvalues[1] <= kMinGap)
      throw NumericalError("bb84_optimal_agreement: top eigenvalue is degenerate");
    ops.push_back(kraus_operator(spec.eigenvectors[0]));
  }
  return bb84_statistics(KrausSet(std::move(ops)), tol);
}

BB84Report bb84_fpb(const Tolerances &tol) {
  const double s = 1.0 / std::sqrt(6.0);
  // Kraus vectors over |m k~), index m*2 + k.
  const Ket a0{2.0 * s, s, s, 0.0};
  const Ket a1{0.0, s, s, -2.0 * s};
  // No |0 0~) component in |A1) (and, by symmetry, no |1 1~) in |A0)).
  if (std::norm(a1[0]) != 0.0 || std::norm(a0[3]) != 0.0)
    throw NumericalError("bb84_fpb: zero-overlap condition violated");
  return bb84_statistics(KrausSet({kraus_operator(a0), kraus_operator(a1)}), tol);
}

std::array<Ket, 2> breidtbart_basis() {
  const double c = std::cos(std::numbers::pi / 8.0);
  const double s = std::sin(std::numbers::pi / 8.0);
  return {Ket{c, s}, Ket{-s, c}};
}

Instrument fpb_probe_instrument(const Tolerances &tol) {
  const Matrix u = controlled_not(breidtbart_basis());
  const double s6 = std::sqrt(6.0);
  const Ket probe{(1.0 + std::numbers::sqrt2) / s6, (1.0 - std::numbers::sqrt2) / s6};
  std::vector<OutcomeChannel> outcomes;
  outcomes.push_back(from_kraus(KrausSet({probe_kraus(u, probe, Ket{1.0, 0.0})})));
  outcomes.push_back(from_kraus(KrausSet({probe_kraus(u, probe, Ket{0.0, 1.0})})));
  return Instrument(std::move(outcomes), {"E0", "E1"}, true, tol);
}

DensityOperator eraser_state(double phi) {
  return DensityOperator::pure(Ket{kInvSqrt2, kInvSqrt2 * std::polar(1.0, phi)});
}

OutcomeChannel decoherence_channel() {
  return from_kraus(KrausSet({projector(Ket{1.0, 0.0}), projector(Ket{0.0, 1.0})}));
}

Instrument eraser_instrument(const Matrix &probe_basis) {
  if (probe_basis.dim() != 2)
    throw DimensionError("eraser_instrument: probe basis must be 2x2");
  if (max_abs_diff(probe_basis * probe_basis.adjoint(), Matrix::identity(2)) > 1e-10)
    throw InvariantError("eraser_instrument: probe basis is not unitary");
  const Matrix u = controlled_not({Ket{1.0, 0.0}, Ket{0.0, 1.0}});
  std::vector<OutcomeChannel> outcomes;
  for (std::size_t i = 0; i < 2; ++i) {
    const Ket bra{probe_basis(i, 0), probe_basis(i, 1)};
    outcomes.push_back(from_kraus(KrausSet({probe_kraus(u, Ket{1.0, 0.0}, bra)})));
  }
  return Instrument(std::move(outcomes), {"A0", "A1"}, true);
}

EraserPoint eraser_run(double phi, const Matrix &probe_basis, const Tolerances &tol) {
  const Instrument probe = eraser_instrument(probe_basis);
  const Matrix summed = probe.outcomes()[0].choi() + probe.outcomes()[1].choi();
  if (max_abs_diff(summed, decoherence_channel().choi()) > 1e-10)
    throw NumericalError("eraser_run: probe outcomes do not sum to the decoherence map");

  const EffectSet later({Effect(projector(bb84_state(1, 0)), tol),
                         Effect(projector(bb84_state(1, 1)), tol)},
                        true, {"+", "-"}, tol);
  const DensityOperator rho = eraser_state(phi);
  const auto first = predictive(probe.outcomes()[0], later, rho, tol);
  const auto second = predictive(probe.outcomes()[1], later, rho, tol);
  return EraserPoint{phi, probe_basis, {first[0], first[1], second[0], second[1]}};
}

double eraser_unconditioned(double phi, const Tolerances &tol) {
  return overlap(decoherence_channel(), eraser_state(phi), Effect(projector(bb84_state(1, 0))),
                 tol);
}

Matrix plus_minus_basis() { return hadamard(); }
Matrix computational_basis() { return Matrix::identity(2); }
Matrix rotated_basis(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return Matrix{{c, s}, {-s, c}};
}

Ket bell_phi_plus() { return Ket{kInvSqrt2, 0.0, 0.0, kInvSqrt2}; }
Ket bell_psi_minus() { return Ket{0.0, kInvSqrt2, -kInvSqrt2, 0.0}; }

PTransposeReport ptranspose_demo(const Tolerances &tol) {
  const OutcomeChannel t = transpose_channel(2);
  const OutcomeChannel t_i = extend_with_identity(t, 2);
  const OutcomeChannel i_i = extend_with_identity(identity_channel(2), 2);
  const Matrix prior = projector(bell_phi_plus());
  const Matrix later = projector(bell_psi_minus());
  return PTransposeReport{raw_overlap(t_i, prior, later), raw_overlap(i_i, prior, later),
                          is_cp(t, tol), is_cp(t_i, tol)};
}

} // namespace liouville::scenarios
