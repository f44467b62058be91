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

#include <stdexcept>
#include <string>

namespace liouville {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions are incompatible.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// A value violates a domain invariant (non-Hermitian, non-PSD, NaN, ...).
class InvariantError : public Error {
public:
  using Error::Error;
};

/// A map failed the complete-positivity gate.
class CpViolation : public Error {
public:
  CpViolation(const std::string &what, double min_eigenvalue)
      : Error(what), min_eigenvalue_(min_eigenvalue) {}
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

private:
  double min_eigenvalue_;
};

/// Conditioning on an event of zero probability.
class ZeroDenominator : public Error {
public:
  using Error::Error;
};

/// A computed probability fell outside [0, 1] beyond rounding.
class NumericalError : public Error {
public:
  using Error::Error;
};

/// Malformed input file or stream.
class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace liouville
