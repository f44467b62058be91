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
#include <limits>
#include <numbers>

#include "liouville/errors.hpp"
#include "liouville/sweep.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace liouville;
using liouville::testing::Rng;

TEST_CASE("phi grid") {
  const auto g = sweep::phi_grid(8);
  REQUIRE(g.size() == 8);
  for (std::size_t k = 0; k < 8; ++k)
    CHECK(g[k] == doctest::Approx(k * std::numbers::pi / 4.0).epsilon(1e-15));
  CHECK(sweep::phi_grid(0).empty());
}

TEST_CASE("parallel eraser sweep matches the serial reference") {
  Rng rng(61);
  const auto phis = sweep::phi_grid(257);
  for (const Matrix &basis : {scenarios::plus_minus_basis(), scenarios::computational_basis(),
                              testing::random_unitary(2, rng)}) {
    const auto par = sweep::eraser_sweep(phis, basis);
    const auto ref = sweep::eraser_sweep_reference(phis, basis);
    REQUIRE(par.size() == ref.size());
    for (std::size_t k = 0; k < par.size(); ++k) {
      CHECK(par[k].phi == ref[k].phi);
      CHECK(par[k].probe_basis == ref[k].probe_basis);
      CHECK(par[k].conditionals == ref[k].conditionals);
    }
  }
}

TEST_CASE("eraser sweep errors") {
  const auto basis = scenarios::plus_minus_basis();
  std::vector<double> phis = sweep::phi_grid(64);
  phis[37] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(sweep::eraser_sweep(phis, basis), InvariantError);
  CHECK_THROWS_AS(sweep::eraser_sweep_reference(phis, basis), InvariantError);
  CHECK_THROWS_AS(sweep::eraser_sweep(sweep::phi_grid(4), Matrix{{1.0, 1.0}, {0.0, 1.0}}),
                  InvariantError);
}

TEST_CASE("parallel batch overlap matches reference and oracle") {
  Rng rng(62);
  std::vector<OutcomeChannel> channels;
  std::vector<DensityOperator> priors;
  std::vector<Effect> effects;
  std::vector<double> oracle;
  for (std::size_t d : {2u, 4u})
    for (int trial = 0; trial < 150; ++trial) {
      auto ops = testing::random_tp_kraus(d, 3, rng);
      ops.pop_back();
      const Matrix rho = testing::random_density(d, rng), b = testing::random_effect(d, rng);
      oracle.push_back(testing::direct_kraus_overlap(ops, rho, b));
      channels.push_back(from_kraus(KrausSet(std::move(ops))));
      priors.emplace_back(rho);
      effects.emplace_back(b);
    }
  const auto par = sweep::batch_overlap(channels, priors, effects);
  const auto ref = sweep::batch_overlap_reference(channels, priors, effects);
  REQUIRE(par.size() == oracle.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i] == ref[i]);
    CHECK(std::abs(par[i] - oracle[i]) < 1e-10);
  }
  CHECK(sweep::batch_overlap({}, {}, {}).empty());
}

TEST_CASE("batch overlap validation") {
  const std::vector<OutcomeChannel> good{identity_channel(2)};
  const std::vector<OutcomeChannel> bad{transpose_channel(2)};
  const std::vector<DensityOperator> priors{DensityOperator::maximally_mixed(2)};
  const std::vector<DensityOperator> wrong_dim{DensityOperator::maximally_mixed(3)};
  const std::vector<Effect> effects{Effect(Matrix::identity(2))};
  CHECK_THROWS_AS(sweep::batch_overlap(bad, priors, effects), CpViolation);
  CHECK_THROWS_AS(sweep::batch_overlap_reference(bad, priors, effects), CpViolation);
  CHECK_THROWS_AS(sweep::batch_overlap(good, wrong_dim, effects), DimensionError);
  CHECK_THROWS_AS(sweep::batch_overlap(good, {}, effects), DimensionError);
  CHECK(sweep::batch_overlap(good, priors, effects)[0] == doctest::Approx(1.0).epsilon(1e-15));
}
