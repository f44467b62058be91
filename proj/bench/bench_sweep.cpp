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

// Parallel sweep/batch kernels against their serial references.

#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "liouville/sweep.hpp"

using namespace liouville;

namespace {

struct Batch {
  std::vector<OutcomeChannel> channels;
  std::vector<DensityOperator> priors;
  std::vector<Effect> effects;
};

// Random unitary-block channels, pure priors and projective effects.
Batch make_batch(std::size_t d, std::size_t n) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  const auto ket = [&] {
    Ket v(d);
    double norm = 0.0;
    for (auto &z : v) {
      z = {g(rng), g(rng)};
      norm += std::norm(z);
    }
    for (auto &z : v)
      z /= std::sqrt(norm);
    return v;
  };
  Batch b;
  for (std::size_t i = 0; i < n; ++i) {
    b.channels.push_back(from_kraus(KrausSet({projector(ket())})));
    b.priors.push_back(DensityOperator::pure(ket()));
    b.effects.emplace_back(projector(ket()));
  }
  return b;
}

void BM_EraserSweep(benchmark::State &state) {
  const auto phis = sweep::phi_grid(static_cast<std::size_t>(state.range(0)));
  const auto basis = scenarios::plus_minus_basis();
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep::eraser_sweep(phis, basis));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EraserSweepReference(benchmark::State &state) {
  const auto phis = sweep::phi_grid(static_cast<std::size_t>(state.range(0)));
  const auto basis = scenarios::plus_minus_basis();
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep::eraser_sweep_reference(phis, basis));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BatchOverlap(benchmark::State &state) {
  const auto b = make_batch(static_cast<std::size_t>(state.range(0)), 2048);
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep::batch_overlap(b.channels, b.priors, b.effects));
  state.SetItemsProcessed(state.iterations() * 2048);
}

void BM_BatchOverlapReference(benchmark::State &state) {
  const auto b = make_batch(static_cast<std::size_t>(state.range(0)), 2048);
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep::batch_overlap_reference(b.channels, b.priors, b.effects));
  state.SetItemsProcessed(state.iterations() * 2048);
}

} // namespace

BENCHMARK(BM_EraserSweep)->Arg(64)->Arg(1024)->UseRealTime();
BENCHMARK(BM_EraserSweepReference)->Arg(64)->Arg(1024)->UseRealTime();
BENCHMARK(BM_BatchOverlap)->Arg(2)->Arg(4)->Arg(8)->UseRealTime();
BENCHMARK(BM_BatchOverlapReference)->Arg(2)->Arg(4)->Arg(8)->UseRealTime();

BENCHMARK_MAIN();
