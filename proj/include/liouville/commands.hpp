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

#include <iosfwd>
#include <string>
#include <vector>

#include "liouville/tolerances.hpp"

namespace liouville::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kPhysicality = 1, ///< not CP, or conditioning on a zero-probability event
  kInputError = 2,  ///< unreadable/malformed input or bad flags
};

/// Formats a number with 12 significant digits, locale-independent.
/// Magnitudes below 5e-13 print as 0.
std::string format_number(double v);

struct VerifyOptions {
  std::string path;
  bool json = false;
  Tolerances tol;
};

struct ProbabilityOptions {
  std::string path;
  bool csv = false;
  Tolerances tol;
};

struct Bb84Options {
  std::string attack = "agreement";
  bool json = false;
  Tolerances tol;
};

struct EraserOptions {
  long phi_steps = 8;
  std::string basis = "plusminus";
  Tolerances tol;
};

struct PTransposeOptions {
  bool json = false;
  Tolerances tol;
};

int cmd_verify(const VerifyOptions &opt, std::ostream &out, std::ostream &err);
int cmd_probability(const ProbabilityOptions &opt, std::ostream &out, std::ostream &err);
int cmd_bb84(const Bb84Options &opt, std::ostream &out, std::ostream &err);
int cmd_eraser(const EraserOptions &opt, std::ostream &out, std::ostream &err);
int cmd_ptranspose(const PTransposeOptions &opt, std::ostream &out, std::ostream &err);

/// Parses arguments (args[0] is the program name) and dispatches.
/// LIOUVILLE_TOL in the environment sets the default tolerance; --tol wins.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace liouville::cli
