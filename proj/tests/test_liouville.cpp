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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "liouville/errors.hpp"
#include "liouville/liouville.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace liouville;
using liouville::testing::Rng;

namespace {

Matrix noisy_pi0(double p) { return Matrix{{1.0 - p, 0.0}, {0.0, p}}; }

Matrix path_state(double phi) {
  const Ket psi{1.0 / std::numbers::sqrt2, std::polar(1.0, phi) / std::numbers::sqrt2};
  return projector(psi);
}

EffectSet plus_minus() {
  return EffectSet({Effect(Matrix{{0.5, 0.5}, {0.5, 0.5}}), Effect(Matrix{{0.5, -0.5}, {-0.5, 0.5}})},
                   true, {"+", "-"});
}

EffectSet random_complete_povm(std::size_t d, std::size_t n, Rng &rng) {
  std::vector<Effect> effects;
  for (const auto &a : testing::random_tp_kraus(d, n, rng)) {
    Matrix e = a.adjoint() * a;
    effects.emplace_back(0.5 * (e + e.adjoint()));
  }
  return EffectSet(std::move(effects), true);
}

} // namespace

TEST_CASE("vectorize / devectorize") {
  const Matrix ket0_bra1{{0.0, 1.0}, {0.0, 0.0}};
  const auto v = vectorize(ket0_bra1);
  CHECK(v.op_dim() == 2);
  CHECK(v.amplitudes() == std::vector<Complex>{0.0, 1.0, 0.0, 0.0});
  CHECK(vectorize(Matrix::identity(2)).amplitudes() == std::vector<Complex>{1.0, 0.0, 0.0, 1.0});

  Rng rng(21);
  for (std::size_t d : {1u, 2u, 3u, 4u}) {
    const Matrix m = testing::random_matrix(d, rng);
    CHECK(devectorize(vectorize(m)) == m);
  }
  CHECK_THROWS_AS(LVector(std::vector<Complex>(3)), DimensionError);
  CHECK_THROWS_AS(LVector(std::vector<Complex>{}), DimensionError);
}

TEST_CASE("linner") {
  for (std::size_t d : {1u, 2u, 5u})
    CHECK(linner(Matrix::identity(d), Matrix::identity(d)) == Complex(static_cast<double>(d)));

  SUBCASE("noisy measurement: wrong-outcome probability p") {
    const Matrix rho0{{1.0, 0.0}, {0.0, 0.0}};
    for (double p : {0.0, 0.05, 0.25, 0.5})
      CHECK(linner(rho0, noisy_pi0(p)).real() == doctest::Approx(1.0 - p).epsilon(1e-15));
  }
  SUBCASE("matches direct trace on random pairs") {
    Rng rng(22);
    for (std::size_t d : {2u, 4u})
      for (int trial = 0; trial < 200; ++trial) {
        const Matrix a = testing::random_matrix(d, rng), b = testing::random_matrix(d, rng);
        const Complex expected = testing::direct_trace_inner(a, b);
        CHECK(std::abs(linner(a, b) - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
      }
  }
  CHECK_THROWS_AS(linner(Matrix::identity(2), Matrix::identity(3)), DimensionError);
}

TEST_CASE("born") {
  SUBCASE("identity outcome is certain") {
    const EffectSet ctx({Effect(Matrix::identity(2))}, true);
    CHECK(born(ctx.effects()[0], DensityOperator(path_state(0.3)), ctx) ==
          doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("interference fringe (1 + cos phi)/2") {
    const auto ctx = plus_minus();
    for (int k = 0; k < 16; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / 16.0;
      const double p = born(ctx.effects()[0], DensityOperator(path_state(phi)), ctx);
      CHECK(std::abs(p - 0.5 * (1.0 + std::cos(phi))) < 1e-12);
    }
  }
  SUBCASE("incomplete context normalizes to the single outcome") {
    Rng rng(23);
    for (double p : {0.01, 0.2, 0.5, 0.9}) {
      const EffectSet ctx({Effect(noisy_pi0(p))}, false);
      const DensityOperator rho(testing::random_density(2, rng));
      // P = x / x with x = Tr(rho pi0) computed directly.
      const double x = testing::direct_trace_inner(noisy_pi0(p), rho.mat()).real();
      CHECK(x > 0.0);
      CHECK(born(ctx.effects()[0], rho, ctx) == doctest::Approx(x / x).epsilon(1e-14));
    }
  }
  SUBCASE("zero normalization is an error, not NaN") {
    const EffectSet ctx({Effect(Matrix{{0.0, 0.0}, {0.0, 1.0}})}, false);
    const DensityOperator rho(Matrix{{1.0, 0.0}, {0.0, 0.0}});
    CHECK_THROWS_AS(born(ctx.effects()[0], rho, ctx), ZeroDenominator);
  }
  SUBCASE("dimension mismatch") {
    const auto ctx = plus_minus();
    CHECK_THROWS_AS(born(ctx.effects()[0], DensityOperator::maximally_mixed(3), ctx),
                    DimensionError);
  }
}

TEST_CASE("born properties on random inputs") {
  Rng rng(24);
  for (std::size_t d : {2u, 3u, 4u})
    for (int trial = 0; trial < 25; ++trial) {
      const auto povm = random_complete_povm(d, 3, rng);
      const Matrix rho_m = testing::random_density(d, rng);
      const DensityOperator rho(rho_m);
      double total = 0.0;
      for (const auto &e : povm.effects()) {
        const double p = born(e, rho, povm);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        total += p;
        // Complete context and unit trace: P = Tr(rho pi).
        CHECK(std::abs(p - testing::direct_trace_inner(e.mat(), rho_m).real()) < 1e-12);
      }
      CHECK(std::abs(total - 1.0) < 1e-10);

      // Uniform positive rescaling of the prior changes nothing.
      std::uniform_real_distribution<double> scale(0.05, 1.0);
      Matrix scaled = rho_m;
      scaled *= scale(rng);
      const DensityOperator rho_c(scaled);
      for (const auto &e : povm.effects())
        CHECK(std::abs(born(e, rho, povm) - born(e, rho_c, povm)) < 1e-12);
    }
}

TEST_CASE("linearity of the unnormalized functional") {
  Rng rng(25);
  std::uniform_real_distribution<double> coef(0.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix e = testing::random_effect(3, rng), f = testing::random_effect(3, rng);
    const Matrix rho = testing::random_density(3, rng);
    const double alpha = coef(rng), beta = coef(rng);
    const Complex combined = linner(alpha * e + beta * f, rho);
    const Complex separate = alpha * linner(e, rho) + beta * linner(f, rho);
    CHECK(std::abs(combined - separate) < 1e-12);
  }
}

TEST_CASE("domain invariants") {
  CHECK_THROWS_AS(DensityOperator(Matrix::identity(2)), InvariantError);                 // trace 2
  CHECK_THROWS_AS(DensityOperator(Matrix{{1.0, 0.0}, {0.0, -0.1}}), InvariantError);    // not PSD
  CHECK_THROWS_AS(DensityOperator(Matrix{{0.5, 0.3}, {0.0, 0.5}}), InvariantError);     // not Hermitian
  CHECK_THROWS_AS(DensityOperator(Matrix(2)), InvariantError);                          // trace 0
  CHECK_NOTHROW(DensityOperator(0.3 * Matrix::identity(2)));                            // sub-normalized
  CHECK_THROWS_AS(Effect(2.0 * Matrix::identity(2)), InvariantError);
  CHECK_THROWS_AS(Effect(Matrix{{1.0, 0.0}, {0.0, -0.5}}), InvariantError);
  CHECK_THROWS_AS(EffectSet({Effect(noisy_pi0(0.1))}, true), InvariantError);
  CHECK_NOTHROW(EffectSet({Effect(noisy_pi0(0.1)), Effect(noisy_pi0(0.9))}, true));
  CHECK_THROWS_AS(EffectSet({Effect(Matrix::identity(2)), Effect(Matrix::identity(3))}, false),
                  DimensionError);
  const auto pm = plus_minus();
  CHECK(pm.index_of("-") == 1);
  CHECK_THROWS_AS(pm.index_of("x"), InvariantError);
}
