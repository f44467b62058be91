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

#include <cstdio>
#include <cstdlib>
#include <locale>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "liouville/commands.hpp"
#include "liouville/io.hpp"

using namespace liouville;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "liouville");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char *name) { return std::string(LIOUVILLE_DATA_DIR) + "/" + name; }
std::string test_data(const char *name) {
  return std::string(LIOUVILLE_TEST_DATA_DIR) + "/" + name;
}

// Runs the installed binary through the shell; returns exit status and stdout.
Result run_shell(const std::string &command) {
  const std::string full = command + " 2>/dev/null";
  FILE *pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (const std::size_t n = std::fread(buf, 1, sizeof buf, pipe))
    out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, {}};
}

bool contains(const std::string &haystack, const std::string &needle) {
  return haystack.find(needle) != std::string::npos;
}

struct ClearEnv {
  ClearEnv() { unsetenv("LIOUVILLE_TOL"); }
};

} // namespace

TEST_CASE("format_number") {
  CHECK(cli::format_number(0.75) == "0.75");
  CHECK(cli::format_number(5.0 / 6.0) == "0.833333333333");
  CHECK(cli::format_number(-0.4999999999999998) == "-0.5");
  CHECK(cli::format_number(1e-15) == "0");
  CHECK(cli::format_number(-3e-13) == "0");
  CHECK(cli::format_number(1.0) == "1");
}

TEST_CASE("bb84 command") {
  ClearEnv env;
  const auto agree = run_cli({"bb84", "--attack", "agreement"});
  CHECK(agree.code == 0);
  CHECK(contains(agree.out, "P(A=E=B) = 0.75\n"));
  CHECK(contains(agree.out, "P(A=B) = 0.833333333333\n"));
  CHECK(contains(agree.out, "P(A=E=B|A=B) = 0.9\n"));
  CHECK(contains(agree.out, "trace preserving: yes\n"));
  CHECK(contains(agree.out, "kraus E0:"));

  const auto fpb = run_cli({"bb84", "--attack=fpb"});
  CHECK(fpb.code == 0);
  CHECK(contains(fpb.out, "P(A=E=B|A=B) = 1\n"));
  CHECK(contains(fpb.out, "disagreement = 0.333333333333\n"));

  const auto js = io::json::parse(run_cli({"bb84", "--attack", "fpb", "--json"}).out);
  CHECK(js.at("disagreement").get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  CHECK(run_cli({"bb84", "--attack", "bogus"}).code == 2);
}

TEST_CASE("eraser command") {
  ClearEnv env;
  const auto r = run_cli({"eraser", "--phi-steps", "4"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "phi,p_plus_given_a0,p_minus_given_a0,p_plus_given_a1,p_minus_given_a1");
  const std::vector<std::string> p_plus{"1", "0.5", "0", "0.5"};
  for (const auto &expected : p_plus) {
    REQUIRE(std::getline(lines, line));
    std::istringstream cells(line);
    std::string phi, first;
    std::getline(cells, phi, ',');
    std::getline(cells, first, ',');
    CHECK(first == expected);
  }
  CHECK_FALSE(std::getline(lines, line));

  const auto comp = run_cli({"eraser", "--phi-steps", "2", "--basis", "computational"});
  CHECK(contains(comp.out, "3.14159265359,0.5,0.5,0.5,0.5\n"));
  CHECK(run_cli({"eraser", "--basis", "angle:0.3"}).code == 0);
  CHECK(run_cli({"eraser", "--basis", "angle:x"}).code == 2);
  CHECK(run_cli({"eraser", "--basis", "diagonal"}).code == 2);
  CHECK(run_cli({"eraser", "--phi-steps", "0"}).code == 2);
  CHECK(run_cli({"eraser", "--phi-steps", "-3"}).code == 2);
}

TEST_CASE("ptranspose command") {
  ClearEnv env;
  const auto r = run_cli({"ptranspose"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "raw overlap ((T,I|Phi+,Psi-)) = -0.5\n"));
  CHECK(contains(r.out, "transpose completely positive: no (min eigenvalue -1)\n"));
  CHECK(contains(r.out, "extended (T,I) completely positive: no (min eigenvalue -2)\n"));
  const auto js = io::json::parse(run_cli({"ptranspose", "--json"}).out);
  CHECK(js.at("raw_overlap").get<double>() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("verify command") {
  ClearEnv env;
  const auto id = run_cli({"verify", data("identity_channel.json")});
  CHECK(id.code == 0);
  CHECK(contains(id.out, "completely positive: yes"));
  CHECK(contains(id.out, "trace preserving: yes"));
  CHECK(contains(id.out, "kraus rank: 1"));

  const auto t = run_cli({"verify", data("transpose_channel.json")});
  CHECK(t.code == 1);
  CHECK(contains(t.out, "completely positive: no (min eigenvalue -1)"));

  const auto noisy = run_cli({"verify", data("noisy_a0.json")});
  CHECK(noisy.code == 0);
  CHECK(contains(noisy.out, "trace preserving: no"));
  CHECK(contains(noisy.out, "kraus rank: 1"));

  // A loose tolerance accepts the transpose map.
  CHECK(run_cli({"verify", data("transpose_channel.json"), "--tol", "2"}).code == 0);
  CHECK(run_cli({"verify", data("transpose_channel.json"), "--tol", "-1"}).code == 2);

  CHECK(run_cli({"verify", test_data("malformed.json")}).code == 2);
  CHECK(run_cli({"verify", test_data("nan_entry.json")}).code == 2);
  CHECK(run_cli({"verify", test_data("dimension_mismatch.json")}).code == 2);
  CHECK(run_cli({"verify", test_data("missing.json")}).code == 2);
}

TEST_CASE("verify --json round trip") {
  ClearEnv env;
  for (const char *file : {"noisy_a0.json", "identity_channel.json", "transpose_channel.json"}) {
    const auto r = run_cli({"verify", data(file), "--json"});
    const auto doc = io::json::parse(r.out);
    CHECK(doc.contains("report"));
    const auto original = io::parse_channel(io::read_json(data(file)));
    const auto back = io::parse_channel(doc);
    CHECK(max_abs_diff(back.channel.choi(), original.channel.choi()) <= 1e-14);
  }
}

TEST_CASE("probability command") {
  ClearEnv env;
  const auto pred = run_cli({"probability", data("eraser_predictive.json")});
  CHECK(pred.code == 0);
  CHECK(contains(pred.out, "P(+ | A+) = 0.75\n"));
  CHECK(contains(pred.out, "P(- | A+) = 0.25\n"));

  const auto inter = run_cli({"probability", data("eraser_interdictive.json"), "--csv"});
  CHECK(inter.code == 0);
  CHECK(inter.out.rfind("rule,first,later,probability\n", 0) == 0);
  CHECK(contains(inter.out, ",0.75\n"));
  CHECK(contains(inter.out, ",0.25\n"));

  const auto joint = run_cli({"probability", data("identity_joint.json"), "--csv"});
  CHECK(joint.out == "rule,first,later,probability\njoint,I,+,1\njoint,I,-,0\n");

  const auto bb84 = run_cli({"probability", data("bb84_agreement_plus.json")});
  CHECK(bb84.code == 0);
  CHECK(contains(bb84.out, "= 0.75\n"));
  CHECK(contains(bb84.out, "= 0.0833333333333\n"));

  const auto zero = run_cli({"probability", test_data("zero_condition.json")});
  CHECK(zero.code == 1);
  CHECK_FALSE(zero.err.empty());
  CHECK(run_cli({"probability", test_data("unphysical_instrument.json")}).code == 1);
  CHECK(run_cli({"probability", test_data("dimension_mismatch.json")}).code == 2);
  CHECK(run_cli({"probability", test_data("malformed.json")}).code == 2);
  CHECK(run_cli({"probability", test_data("nan_entry.json")}).code == 2);
}

TEST_CASE("argument errors") {
  ClearEnv env;
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"verify"}).code == 2);
  CHECK(run_cli({"ptranspose", "--tol", "abc"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("output ignores the global locale") {
  ClearEnv env;
  struct Comma : std::numpunct<char> {
    char do_decimal_point() const override { return ','; }
    char do_thousands_sep() const override { return '.'; }
    std::string do_grouping() const override { return "\3"; }
  };
  const std::locale previous = std::locale::global(std::locale(std::locale::classic(), new Comma));
  const auto r = run_cli({"eraser", "--phi-steps", "4"});
  std::locale::global(previous);
  CHECK(contains(r.out, "1.57079632679,0.5,0.5,0.5,0.5\n"));
}

TEST_CASE("binary: stdin, environment, exit codes") {
  const std::string bin = LIOUVILLE_CLI_PATH;
  const auto piped = run_shell("env -u LIOUVILLE_TOL " + bin + " verify - < " +
                               data("identity_channel.json"));
  CHECK(piped.code == 0);
  CHECK(contains(piped.out, "kraus rank: 1"));

  CHECK(run_shell("env -u LIOUVILLE_TOL " + bin + " verify " + data("transpose_channel.json"))
            .code == 1);
  CHECK(run_shell("LIOUVILLE_TOL=2 " + bin + " verify " + data("transpose_channel.json")).code ==
        0);
  // The flag wins over the environment.
  CHECK(run_shell("LIOUVILLE_TOL=2 " + bin + " verify " + data("transpose_channel.json") +
                  " --tol 1e-9")
            .code == 1);
  CHECK(run_shell("LIOUVILLE_TOL=abc " + bin + " ptranspose").code == 2);
  CHECK(run_shell("LIOUVILLE_TOL=-1 " + bin + " ptranspose").code == 2);

  const auto bb = run_shell("env -u LIOUVILLE_TOL " + bin + " bb84 --attack agreement");
  CHECK(bb.code == 0);
  CHECK(contains(bb.out, "P(A=E=B|A=B) = 0.9\n"));
  CHECK(run_shell("env -u LIOUVILLE_TOL " + bin + " probability - < " +
                  test_data("zero_condition.json"))
            .code == 1);
  CHECK(run_shell("echo '{' | env -u LIOUVILLE_TOL " + bin + " probability -").code == 2);
}
