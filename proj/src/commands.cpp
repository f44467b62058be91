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

#include "liouville/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "liouville/errors.hpp"
#include "liouville/io.hpp"
#include "liouville/probability.hpp"
#include "liouville/scenarios.hpp"
#include "liouville/superliouville.hpp"
#include "liouville/sweep.hpp"

namespace liouville::cli {

namespace {

using io::json;

std::string format_complex(Complex z) {
  if (std::abs(z.imag()) < 5e-13)
    return format_number(z.real());
  return fmt::format("{}{}{}i", format_number(z.real()), z.imag() < 0 ? "-" : "+",
                     format_number(std::abs(z.imag())));
}

void print_matrix(std::ostream &out, const Matrix &m, const char *indent) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    out << indent << '[';
    for (std::size_t j = 0; j < m.dim(); ++j)
      out << (j ? ", " : "") << format_complex(m(i, j));
    out << "]\n";
  }
}

const char *yes_no(bool b) { return b ? "yes" : "no"; }

// Maps library exceptions onto the exit-code contract.
template <class F> int guarded(std::ostream &err, F &&body) {
  try {
    return body();
  } catch (const CpViolation &e) {
    err << "error: " << e.what() << '\n';
    return kPhysicality;
  } catch (const ZeroDenominator &e) {
    err << "error: " << e.what() << '\n';
    return kPhysicality;
  } catch (const ParseError &e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DimensionError &e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InvariantError &e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception &e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
}

std::size_t kraus_rank(const OutcomeChannel &c) {
  double total = 0.0;
  for (double chi : c.spectrum().eigenvalues)
    total += chi;
  std::size_t rank = 0;
  for (double chi : c.spectrum().eigenvalues)
    if (chi > 1e-12 * total)
      ++rank;
  return rank;
}

Matrix parse_basis(const std::string &name) {
  if (name == "plusminus")
    return scenarios::plus_minus_basis();
  if (name == "computational")
    return scenarios::computational_basis();
  if (name.rfind("angle:", 0) == 0) {
    const std::string arg = name.substr(6);
    char *end = nullptr;
    const double theta = std::strtod(arg.c_str(), &end);
    if (arg.empty() || *end != '\0' || !std::isfinite(theta))
      throw ParseError("--basis: bad angle '" + arg + "'");
    return scenarios::rotated_basis(theta);
  }
  throw ParseError("--basis: expected plusminus, computational or angle:<radians>");
}

std::optional<double> parse_tolerance(const std::string &text) {
  char *end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || *end != '\0' || !std::isfinite(v) || v <= 0.0)
    return std::nullopt;
  return v;
}

Tolerances certification_tolerance(double tol) {
  Tolerances t;
  t.cp = tol;
  t.tp = tol;
  return t;
}

} // namespace

std::string format_number(double v) {
  if (std::abs(v) < 5e-13)
    return "0";
  return fmt::format("{:.12g}", v);
}

int cmd_verify(const VerifyOptions &opt, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    const auto payload = io::parse_channel(io::read_json(opt.path), opt.tol);
    const OutcomeChannel &c = payload.channel;
    const double herm_residual = max_abs_diff(c.choi(), c.choi().adjoint());
    const CpReport cp = is_cp(c, opt.tol);
    const bool tp = max_abs_diff(contraction(c), Matrix::identity(c.dim())) <= opt.tol.tp;
    const bool nonincreasing = is_trace_nonincreasing(c, opt.tol);
    const auto &spectrum = c.spectrum().eigenvalues;

    if (opt.json) {
      json report{{"hermiticity_residual", herm_residual},
                  {"choi_spectrum", spectrum},
                  {"completely_positive", cp.cp},
                  {"min_eigenvalue", cp.min_eigenvalue},
                  {"trace_preserving", tp},
                  {"trace_nonincreasing", nonincreasing},
                  {"kraus_rank", cp.cp ? json(kraus_rank(c)) : json(nullptr)}};
      json doc = io::channel_to_json(c);
      doc["report"] = std::move(report);
      out << doc.dump(2) << '\n';
    } else {
      out << "dimension: " << c.dim() << '\n';
      out << "hermiticity residual: " << format_number(herm_residual) << '\n';
      out << "choi spectrum:";
      for (double chi : spectrum)
        out << ' ' << format_number(chi);
      out << '\n';
      out << "completely positive: " << yes_no(cp.cp)
          << " (min eigenvalue " << format_number(cp.min_eigenvalue) << ")\n";
      out << "trace preserving: " << yes_no(tp) << '\n';
      out << "trace non-increasing: " << yes_no(nonincreasing) << '\n';
      if (cp.cp)
        out << "kraus rank: " << kraus_rank(c) << '\n';
      else
        out << "kraus rank: n/a\n";
    }
    return cp.cp ? kOk : kPhysicality;
  });
}

int cmd_probability(const ProbabilityOptions &opt, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    const io::Scenario s = io::parse_scenario(io::read_json(opt.path), opt.tol);
    struct Row {
      std::string first, later;
      double p;
    };
    std::vector<Row> rows;
    const char *rule_name = "joint";
    switch (s.rule) {
    case io::Rule::Joint: {
      const auto t = joint(s.instrument, s.effects, s.prior, opt.tol);
      for (std::size_t i = 0; i < t.rows().size(); ++i)
        for (std::size_t j = 0; j < t.cols().size(); ++j)
          rows.push_back({t.rows()[i], t.cols()[j], t.at(i, j)});
      break;
    }
    case io::Rule::Predictive: {
      rule_name = "predictive";
      const std::size_t i = s.instrument.index_of(*s.condition);
      const auto p = predictive(s.instrument.outcomes()[i], s.effects, s.prior, opt.tol);
      for (std::size_t j = 0; j < p.size(); ++j)
        rows.push_back({*s.condition, s.effects.labels()[j], p[j]});
      break;
    }
    case io::Rule::Interdictive: {
      rule_name = "interdictive";
      const std::size_t j = s.effects.index_of(*s.condition);
      const auto p = interdictive(s.instrument, s.effects.effects()[j], s.prior, opt.tol);
      for (std::size_t i = 0; i < p.size(); ++i)
        rows.push_back({s.instrument.labels()[i], *s.condition, p[i]});
      break;
    }
    }

    if (opt.csv) {
      out << "rule,first,later,probability\n";
      for (const auto &r : rows)
        out << rule_name << ',' << r.first << ',' << r.later << ',' << format_number(r.p) << '\n';
    } else {
      out << "rule: " << rule_name << '\n';
      for (const auto &r : rows) {
        if (s.rule == io::Rule::Joint)
          out << "P(" << r.first << ", " << r.later << ") = ";
        else if (s.rule == io::Rule::Predictive)
          out << "P(" << r.later << " | " << r.first << ") = ";
        else
          out << "P(" << r.first << " | " << r.later << ") = ";
        out << format_number(r.p) << '\n';
      }
    }
    return kOk;
  });
}

int cmd_bb84(const Bb84Options &opt, std::ostream &out, std::ostream &err) {
  if (opt.attack != "agreement" && opt.attack != "fpb") {
    err << "input error: --attack must be 'agreement' or 'fpb'\n";
    return kInputError;
  }
  return guarded(err, [&] {
    const auto r = opt.attack == "agreement" ? scenarios::bb84_optimal_agreement(opt.tol)
                                             : scenarios::bb84_fpb(opt.tol);
    if (opt.json) {
      json kraus = json::array();
      for (const auto &a : r.attack_kraus.operators())
        kraus.push_back(io::matrix_to_json(a));
      out << json{{"attack", opt.attack},
                  {"p_all_agree", r.p_all_agree},
                  {"p_ab_agree", r.p_ab_agree},
                  {"p_cond", r.p_cond},
                  {"disagreement", r.disagreement()},
                  {"trace_preserving", r.tp_verified},
                  {"kraus", std::move(kraus)}}
                 .dump(2)
          << '\n';
    } else {
      out << "attack: " << opt.attack << '\n';
      out << "P(A=E=B) = " << format_number(r.p_all_agree) << '\n';
      out << "P(A=B) = " << format_number(r.p_ab_agree) << '\n';
      out << "P(A=E=B|A=B) = " << format_number(r.p_cond) << '\n';
      out << "disagreement = " << format_number(r.disagreement()) << '\n';
      out << "trace preserving: " << yes_no(r.tp_verified) << '\n';
      for (std::size_t e = 0; e < r.attack_kraus.size(); ++e) {
        out << "kraus E" << e << ":\n";
        print_matrix(out, r.attack_kraus.operators()[e], "  ");
      }
    }
    return r.tp_verified ? kOk : kPhysicality;
  });
}

int cmd_eraser(const EraserOptions &opt, std::ostream &out, std::ostream &err) {
  if (opt.phi_steps < 1) {
    err << "input error: --phi-steps must be at least 1\n";
    return kInputError;
  }
  return guarded(err, [&] {
    const Matrix basis = parse_basis(opt.basis);
    const auto phis = sweep::phi_grid(static_cast<std::size_t>(opt.phi_steps));
    const auto points = sweep::eraser_sweep(phis, basis, opt.tol);
    out << "phi,p_plus_given_a0,p_minus_given_a0,p_plus_given_a1,p_minus_given_a1\n";
    for (const auto &p : points) {
      out << format_number(p.phi);
      for (double c : p.conditionals)
        out << ',' << format_number(c);
      out << '\n';
    }
    return kOk;
  });
}

int cmd_ptranspose(const PTransposeOptions &opt, std::ostream &out, std::ostream &err) {
  return guarded(err, [&] {
    const auto r = scenarios::ptranspose_demo(opt.tol);
    if (opt.json) {
      out << json{{"raw_overlap", r.raw_overlap},
                  {"identity_overlap", r.identity_overlap},
                  {"transpose_cp", r.transpose_cp.cp},
                  {"transpose_min_eigenvalue", r.transpose_cp.min_eigenvalue},
                  {"extended_cp", r.extended_cp.cp},
                  {"extended_min_eigenvalue", r.extended_cp.min_eigenvalue}}
                 .dump(2)
          << '\n';
    } else {
      out << "raw overlap ((T,I|Phi+,Psi-)) = " << format_number(r.raw_overlap) << '\n';
      out << "identity overlap ((I,I|Phi+,Psi-)) = " << format_number(r.identity_overlap) << '\n';
      out << "transpose completely positive: " << yes_no(r.transpose_cp.cp)
          << " (min eigenvalue " << format_number(r.transpose_cp.min_eigenvalue) << ")\n";
      out << "extended (T,I) completely positive: " << yes_no(r.extended_cp.cp)
          << " (min eigenvalue " << format_number(r.extended_cp.min_eigenvalue) << ")\n";
    }
    return kOk;
  });
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  double default_tol = Tolerances{}.cp;
  if (const char *env = std::getenv("LIOUVILLE_TOL")) {
    const auto v = parse_tolerance(env);
    if (!v) {
      err << "input error: LIOUVILLE_TOL must be a positive number\n";
      return kInputError;
    }
    default_tol = *v;
  }

  CLI::App app{"Liouville-space calculus for sequential quantum measurements", "liouville"};
  app.require_subcommand(1);
  double tol = default_tol;
  const auto add_tol = [&](CLI::App *sub) {
    sub->add_option("--tol", tol, "CP/TP certification tolerance")
        ->check(CLI::PositiveNumber);
  };

  VerifyOptions verify;
  auto *verify_cmd = app.add_subcommand("verify", "Certify a channel file (CP, TP, Kraus rank)");
  verify_cmd->add_option("path", verify.path, "Channel JSON file, '-' for stdin")->required();
  verify_cmd->add_flag("--json", verify.json, "Emit a JSON report (re-parses as a channel file)");
  add_tol(verify_cmd);

  ProbabilityOptions prob;
  auto *prob_cmd = app.add_subcommand("probability", "Evaluate a scenario file");
  prob_cmd->add_option("path", prob.path, "Scenario JSON file, '-' for stdin")->required();
  prob_cmd->add_flag("--csv", prob.csv, "Emit CSV");
  add_tol(prob_cmd);

  Bb84Options bb84;
  auto *bb84_cmd = app.add_subcommand("bb84", "Reproduce the BB84 eavesdropping attacks");
  bb84_cmd->add_option("--attack", bb84.attack, "agreement | fpb");
  bb84_cmd->add_flag("--json", bb84.json, "Emit JSON");
  add_tol(bb84_cmd);

  EraserOptions eraser;
  auto *eraser_cmd = app.add_subcommand("eraser", "Quantum-eraser fringes as CSV");
  eraser_cmd->add_option("--phi-steps", eraser.phi_steps, "Uniform steps over [0, 2pi)");
  eraser_cmd->add_option("--basis", eraser.basis,
                         "Probe readout basis: plusminus | computational | angle:<radians>");
  add_tol(eraser_cmd);

  PTransposeOptions pt;
  auto *pt_cmd = app.add_subcommand("ptranspose", "Partial-transpose unphysicality witness");
  pt_cmd->add_flag("--json", pt.json, "Emit JSON");
  add_tol(pt_cmd);

  std::vector<const char *> argv;
  argv.reserve(args.size());
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }

  const Tolerances certification = certification_tolerance(tol);
  if (verify_cmd->parsed()) {
    verify.tol = certification;
    return cmd_verify(verify, out, err);
  }
  if (prob_cmd->parsed()) {
    prob.tol = certification;
    return cmd_probability(prob, out, err);
  }
  if (bb84_cmd->parsed()) {
    bb84.tol = certification;
    return cmd_bb84(bb84, out, err);
  }
  if (eraser_cmd->parsed()) {
    eraser.tol = certification;
    return cmd_eraser(eraser, out, err);
  }
  pt.tol = certification;
  return cmd_ptranspose(pt, out, err);
}

} // namespace liouville::cli
