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

namespace liouville {

/// Validation thresholds shared by every module. Defaults match the
/// library contracts; pass a modified copy to override per call.
struct Tolerances {
  double hermitian = 1e-10; ///< max |m(i,j) - conj(m(j,i))|
  double psd = 1e-10;       ///< admitted negative eigenvalue of states/effects
  double trace = 1e-10;     ///< slack on trace and completeness checks
  double cp = 1e-9;         ///< relative negative eigenvalue admitted in a choi
  double tp = 1e-9;         ///< max entry of sum A^dag A - I
  double zero = 1e-14;      ///< denominators at or below this are zero

  /// Same threshold for every check except `zero`.
  static Tolerances uniform(double tol) {
    Tolerances t;
    t.hermitian = t.psd = t.trace = t.cp = t.tp = tol;
    return t;
  }
};

} // namespace liouville
