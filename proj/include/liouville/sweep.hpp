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
#include <span>
#include <vector>

#include "liouville/liouville.hpp"
#include "liouville/scenarios.hpp"
#include "liouville/superliouville.hpp"
#include "liouville/tolerances.hpp"

/// Batch kernels. Each has an OpenMP-parallel version and a serial
/// `_reference` twin; both return results in input order and agree bitwise.
namespace liouville::sweep {

/// `steps` uniformly spaced angles k * 2pi / steps, k = 0 .. steps-1.
std::vector<double> phi_grid(std::size_t steps);

std::vector<scenarios::EraserPoint> eraser_sweep(std::span<const double> phis,
                                                 const Matrix &probe_basis,
                                                 const Tolerances &tol = {});
std::vector<scenarios::EraserPoint> eraser_sweep_reference(std::span<const double> phis,
                                                           const Matrix &probe_basis,
                                                           const Tolerances &tol = {});

/// overlap(channels[i], priors[i], effects[i]) for every i. All channels
/// are CP-checked before any work starts.
std::vector<double> batch_overlap(std::span<const OutcomeChannel> channels,
                                  std::span<const DensityOperator> priors,
                                  std::span<const Effect> effects, const Tolerances &tol = {});
std::vector<double> batch_overlap_reference(std::span<const OutcomeChannel> channels,
                                            std::span<const DensityOperator> priors,
                                            std::span<const Effect> effects,
                                            const Tolerances &tol = {});

} // namespace liouville::sweep
