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

#include <optional>
#include <string>

#include <json.hpp>

#include "liouville/liouville.hpp"
#include "liouville/superliouville.hpp"
#include "liouville/tolerances.hpp"

/// JSON file formats. Complex numbers are [re, im] pairs (a bare number is
/// read as a real); matrices are arrays of rows.
///
/// Channel file:
///   {"format": "liouville-channel", "version": 1, "dims": [d, d],
///    "kraus": [M, ...]}            or   "choi": M  (dimension d*d)
///
/// Scenario file:
///   {"format": "liouville-scenario", "version": 1,
///    "prior": M,
///    "instrument": {"trace_preserving": bool,
///                   "outcomes": [{"label": "A0", <channel payload>}, ...]},
///    "effects": {"complete": bool,
///                "items": [{"label": "+", "matrix": M}, ...]},
///    "rule": "joint" | "predictive" | "interdictive",
///    "condition": "<label>"}       (predictive: an instrument label,
///                                   interdictive: an effect label)
namespace liouville::io {

using nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Reads a whole JSON document; "-" means standard input. Throws ParseError.
json read_json(const std::string &path);

Matrix parse_matrix(const json &j, const char *what);
json matrix_to_json(const Matrix &m);

struct ChannelPayload {
  std::optional<KrausSet> kraus; ///< set when the file listed Kraus operators
  OutcomeChannel channel;        ///< not CP-validated
};

/// Parses "dims" plus "kraus" or "choi" from a channel object. Throws
/// ParseError on malformed input and DimensionError on inconsistent shapes.
ChannelPayload parse_channel(const json &j, const Tolerances &tol = {});

/// Channel file with the choi matrix written at full precision.
json channel_to_json(const OutcomeChannel &c);

enum class Rule { Joint, Predictive, Interdictive };

struct Scenario {
  DensityOperator prior;
  Instrument instrument;
  EffectSet effects;
  Rule rule;
  std::optional<std::string> condition;
};

/// Parses and cross-checks a scenario: dimensions agree, the condition
/// label exists where the rule needs one.
Scenario parse_scenario(const json &j, const Tolerances &tol = {});

} // namespace liouville::io
