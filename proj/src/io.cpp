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

#include "liouville/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "liouville/errors.hpp"

namespace liouville::io {

namespace {

Complex parse_complex(const json &j, const char *what) {
  double re = 0.0, im = 0.0;
  if (j.is_number()) {
    re = j.get<double>();
  } else if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    re = j[0].get<double>();
    im = j[1].get<double>();
  } else {
    throw ParseError(std::string(what) + ": complex entries must be [re, im]");
  }
  if (!std::isfinite(re) || !std::isfinite(im))
    throw ParseError(std::string(what) + ": non-finite entry");
  return {re, im};
}

const json &require(const json &j, const char *key, const char *what) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  return j.at(key);
}

void check_version(const json &j, const char *what) {
  if (j.contains("version")) {
    if (!j.at("version").is_number_integer() || j.at("version").get<int>() != kFormatVersion)
      throw ParseError(std::string(what) + ": unsupported version");
  }
}

std::size_t parse_dim(const json &j) {
  if (j.contains("dims")) {
    const json &d = j.at("dims");
    if (!d.is_array() || d.size() != 2 || !d[0].is_number_unsigned() || !d[1].is_number_unsigned())
      throw ParseError("channel: \"dims\" must be [d_in, d_out]");
    const auto din = d[0].get<std::size_t>(), dout = d[1].get<std::size_t>();
    if (din != dout)
      throw DimensionError("channel: only d_in == d_out is supported");
    if (din == 0)
      throw DimensionError("channel: dimension must be positive");
    return din;
  }
  if (j.contains("dim") && j.at("dim").is_number_unsigned() && j.at("dim").get<std::size_t>() > 0)
    return j.at("dim").get<std::size_t>();
  throw ParseError("channel: missing \"dims\"");
}

Rule parse_rule(const json &j) {
  if (!j.is_string())
    throw ParseError("scenario: \"rule\" must be a string");
  const auto s = j.get<std::string>();
  if (s == "joint")
    return Rule::Joint;
  if (s == "predictive")
    return Rule::Predictive;
  if (s == "interdictive")
    return Rule::Interdictive;
  throw ParseError("scenario: unknown rule '" + s + "'");
}

std::string parse_label(const json &item, const char *what) {
  const json &l = require(item, "label", what);
  if (!l.is_string())
    throw ParseError(std::string(what) + ": label must be a string");
  return l.get<std::string>();
}

} // namespace

json read_json(const std::string &path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in)
      throw ParseError("cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Matrix parse_matrix(const json &j, const char *what) {
  if (!j.is_array() || j.empty())
    throw ParseError(std::string(what) + ": matrix must be a nonempty array of rows");
  const std::size_t d = j.size();
  std::vector<Complex> entries;
  entries.reserve(d * d);
  for (const auto &row : j) {
    if (!row.is_array() || row.size() != d)
      throw DimensionError(std::string(what) + ": matrix is not square");
    for (const auto &z : row)
      entries.push_back(parse_complex(z, what));
  }
  return Matrix(d, std::move(entries));
}

json matrix_to_json(const Matrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.dim(); ++k)
      row.push_back(json::array({m(i, k).real(), m(i, k).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ChannelPayload parse_channel(const json &j, const Tolerances &tol) {
  if (!j.is_object())
    throw ParseError("channel: expected an object");
  check_version(j, "channel");
  const std::size_t d = parse_dim(j);
  const bool has_kraus = j.contains("kraus"), has_choi = j.contains("choi");
  if (has_kraus == has_choi)
    throw ParseError("channel: exactly one of \"kraus\" or \"choi\" is required");
  if (has_kraus) {
    const json &list = j.at("kraus");
    if (!list.is_array() || list.empty())
      throw ParseError("channel: \"kraus\" must be a nonempty array");
    std::vector<Matrix> ops;
    for (const auto &m : list) {
      ops.push_back(parse_matrix(m, "kraus operator"));
      if (ops.back().dim() != d)
        throw DimensionError("channel: Kraus operator shape disagrees with dims");
    }
    KrausSet k(std::move(ops));
    OutcomeChannel c = from_kraus(k);
    return {std::move(k), std::move(c)};
  }
  Matrix choi = parse_matrix(j.at("choi"), "choi");
  if (choi.dim() != d * d)
    throw DimensionError("channel: choi dimension disagrees with dims");
  if (!is_hermitian(choi, tol.hermitian))
    throw ParseError("channel: choi matrix is not Hermitian");
  return {std::nullopt, OutcomeChannel::unvalidated(std::move(choi), tol)};
}

json channel_to_json(const OutcomeChannel &c) {
  return json{{"format", "liouville-channel"},
              {"version", kFormatVersion},
              {"dims", json::array({c.dim(), c.dim()})},
              {"choi", matrix_to_json(c.choi())}};
}

Scenario parse_scenario(const json &j, const Tolerances &tol) {
  if (!j.is_object())
    throw ParseError("scenario: expected an object");
  check_version(j, "scenario");

  Matrix prior_mat = parse_matrix(require(j, "prior", "scenario"), "prior");
  DensityOperator prior = [&] {
    try {
      return DensityOperator(std::move(prior_mat), tol);
    } catch (const InvariantError &e) {
      throw ParseError(std::string("scenario prior: ") + e.what());
    }
  }();

  const json &inst_j = require(j, "instrument", "scenario");
  const json &outcomes_j = require(inst_j, "outcomes", "instrument");
  if (!outcomes_j.is_array() || outcomes_j.empty())
    throw ParseError("instrument: \"outcomes\" must be a nonempty array");
  std::vector<OutcomeChannel> outcomes;
  std::vector<std::string> labels;
  for (const auto &o : outcomes_j) {
    labels.push_back(parse_label(o, "instrument outcome"));
    json payload = o;
    if (!payload.contains("dims") && !payload.contains("dim"))
      payload["dims"] = json::array({prior.dim(), prior.dim()});
    outcomes.push_back(parse_channel(payload, tol).channel);
  }
  const bool tp = inst_j.value("trace_preserving", false);
  Instrument instrument = [&] {
    try {
      return Instrument(std::move(outcomes), std::move(labels), tp, tol);
    } catch (const InvariantError &e) {
      throw ParseError(std::string("scenario instrument: ") + e.what());
    }
  }();

  const json &eff_j = require(j, "effects", "scenario");
  const json &items = require(eff_j, "items", "effects");
  if (!items.is_array() || items.empty())
    throw ParseError("effects: \"items\" must be a nonempty array");
  const json &complete_j = require(eff_j, "complete", "effects");
  if (!complete_j.is_boolean())
    throw ParseError("effects: \"complete\" must be a boolean");
  std::vector<Effect> effects;
  std::vector<std::string> effect_labels;
  EffectSet effect_set = [&] {
    try {
      for (const auto &item : items) {
        effect_labels.push_back(parse_label(item, "effect"));
        effects.emplace_back(parse_matrix(require(item, "matrix", "effect"), "effect"), tol);
      }
      return EffectSet(std::move(effects), complete_j.get<bool>(), std::move(effect_labels), tol);
    } catch (const InvariantError &e) {
      throw ParseError(std::string("scenario effects: ") + e.what());
    }
  }();

  if (instrument.dim() != prior.dim() || effect_set.dim() != prior.dim())
    throw DimensionError("scenario: prior, instrument and effects disagree in dimension");

  const Rule rule = parse_rule(require(j, "rule", "scenario"));
  std::optional<std::string> condition;
  if (rule != Rule::Joint) {
    const json &c = require(j, "condition", "scenario");
    if (!c.is_string())
      throw ParseError("scenario: \"condition\" must be a string");
    condition = c.get<std::string>();
    try {
      if (rule == Rule::Predictive)
        instrument.index_of(*condition);
      else
        effect_set.index_of(*condition);
    } catch (const InvariantError &e) {
      throw ParseError(std::string("scenario condition: ") + e.what());
    }
  }
  return Scenario{std::move(prior), std::move(instrument), std::move(effect_set), rule,
                  std::move(condition)};
}

} // namespace liouville::io
