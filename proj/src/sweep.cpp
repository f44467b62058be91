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

#include "liouville/sweep.hpp"

#include <exception>
#include <numbers>
#include <string>


#include "liouville/errors.hpp"

namespace liouville::sweep {

namespace {

void check_batch(std::span<const OutcomeChannel> channels, std::span<const DensityOperator> priors,
                 std::span<const Effect> effects, const Tolerances &tol) {
  if (channels.size() != priors.size() || channels.size() != effects.size())
    throw DimensionError("batch_overlap: input lengths differ");
  for (std::size_t i = 0; i < channels.size(); ++i) {
    require_cp(channels[i], tol, "batch_overlap");
    if (channels[i].dim() != priors[i].dim() || channels[i].dim() != effects[i].dim())
      throw DimensionError("batch_overlap: dimension mismatch at index " + std::to_string(i));
  }
}

} // namespace

std::vector<double> phi_grid(std::size_t steps) {
  std::vector<double> phis(steps);
  for (std::size_t k = 0; k < steps; ++k)
    phis[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(steps);
  return phis;
}

std::vector<scenarios::EraserPoint> eraser_sweep_reference(std::span<const double> phis,
                                                           const Matrix &probe_basis,
                                                           const Tolerances &tol) {
  std::vector<scenarios::EraserPoint> out;
  out.reserve(phis.size());
  for (double phi : phis)
    out.push_back(scenarios::eraser_run(phi, probe_basis, tol));
  return out;
}

std::vector<scenarios::EraserPoint> eraser_sweep(std::span<const double> phis,
                                                 const Matrix &probe_basis,
                                                 const Tolerances &tol) {
  // Fail fast on a bad basis outside the parallel region.
  scenarios::eraser_instrument(probe_basis);
  const auto n = static_cast<std::ptrdiff_t>(phis.size());
  std::vector<scenarios::EraserPoint> out(phis.size(),
                                          scenarios::EraserPoint{0.0, probe_basis, {}});
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    try {
      out[k] = scenarios::eraser_run(phis[k], probe_basis, tol);
    } catch (...) {
#pragma omp critical(liouville_sweep_failure)
      if (!failure)
        failure = std::current_exception();
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  return out;
}

std::vector<double> batch_overlap_reference(std::span<const OutcomeChannel> channels,
                                            std::span<const DensityOperator> priors,
                                            std::span<const Effect> effects,
                                            const Tolerances &tol) {
  check_batch(channels, priors, effects, tol);
  std::vector<double> out(channels.size());
  for (std::size_t i = 0; i < channels.size(); ++i)
    out[i] = raw_overlap(channels[i], priors[i].mat(), effects[i].mat());
  return out;
}

std::vector<double> batch_overlap(std::span<const OutcomeChannel> channels,
                                  std::span<const DensityOperator> priors,
                                  std::span<const Effect> effects, const Tolerances &tol) {
  check_batch(channels, priors, effects, tol);
  const auto n = static_cast<std::ptrdiff_t>(channels.size());
  std::vector<double> out(channels.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[i] = raw_overlap(channels[i], priors[i].mat(), effects[i].mat());
  return out;
}

} // namespace liouville::sweep
