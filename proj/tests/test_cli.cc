// Copyright 2026 The clusterqis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "clusterqis/errors.h"
#include "clusterqis/party.h"

namespace clusterqis::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("clusterqis_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST(Parse, Amplitudes) {
  const auto pairs = parse_amplitudes("0.6,0,0,0.8", 2, false);
  EXPECT_EQ(pairs[1], Complex(0.0, 0.8));
  const auto reals = parse_amplitudes("0.6,0.8", 2, false);
  EXPECT_EQ(reals[1], Complex(0.8, 0.0));
  EXPECT_THROW(parse_amplitudes("0.6,0.7", 2, false), ConfigError);
  EXPECT_NO_THROW(parse_amplitudes("0.6,0.7", 2, true));
  EXPECT_NEAR(std::norm(parse_amplitudes("3,4", 2, true)[1]), 0.64, 1e-15);
  EXPECT_NO_THROW(parse_amplitudes("0.6,0.8000000001", 2, false));  // within 1e-9
  EXPECT_THROW(parse_amplitudes("0.6,0.8,0", 2, false), ConfigError);
  EXPECT_THROW(parse_amplitudes("0.6,x", 2, false), ConfigError);
  EXPECT_THROW(parse_amplitudes("0,0", 2, true), ConfigError);
}

TEST(Parse, Range) {
  const auto r = parse_range("0.1:0.8:0.05");
  ASSERT_EQ(r.size(), 15u);
  EXPECT_EQ(r.front(), 0.1);
  EXPECT_EQ(r.back(), 0.8);
  EXPECT_EQ(r[8], 0.5);
  EXPECT_THROW(parse_range("0.1:0.8"), ConfigError);
  EXPECT_THROW(parse_range("0.1:0.8:0"), ConfigError);
  EXPECT_THROW(parse_range("0.8:0.1:0.1"), ConfigError);
}

TEST(Teleport, SpecCommandIsDeterministic) {
  const std::vector<std::string> args = {"teleport", "--cluster", "0.5,0.5,0.5,0.5", "--input", "0.6,0,0.8,0",
                                         "--rho", "1.5", "--n", "5", "--seed", "7"};
  const CliRun a = run_cli(args);
  const CliRun b = run_cli(args);
  EXPECT_TRUE(a.code == 0 || a.code == 1);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("trials_used "), std::string::npos);
  EXPECT_NE(a.out.find("povm_outcomes "), std::string::npos);
}

TEST(Teleport, NormalizationError) {
  const CliRun r = run_cli({"teleport", "--cluster", "0.8,0.5,0.3,0.1"});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_NE(r.err.find("normalization"), std::string::npos);
}

TEST(Teleport, InvalidPovm) {
  const CliRun r = run_cli({"teleport", "--rho", "0.2", "--cluster", "0.5,0.5,0.5,0.5"});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_NE(r.err.find("POVM K3 not positive semidefinite"), std::string::npos);
}

TEST(Teleport, InputNotNormalized) {
  EXPECT_EQ(run_cli({"teleport", "--input", "0.6,0,0.7,0"}).code, kExitConfigError);
  EXPECT_EQ(run_cli({"teleport", "--input", "0.6,0,0.7,0", "--renormalize"}).code == kExitConfigError, false);
}

TEST(Teleport, FailureExitCodeAndTranscript) {
  // Find a seed where one attempt fails, then check the code and the file.
  const auto path = temp_file("teleport.txt");
  for (int seed = 0; seed < 50; ++seed) {
    const CliRun r = run_cli({"teleport", "--input", "0.6,0.8", "--n", "1", "--seed", std::to_string(seed),
                           "--transcript", path.string()});
    ASSERT_TRUE(r.code == 0 || r.code == 1);
    const Transcript t = parse_transcript(slurp(path));
    EXPECT_EQ(t.messages.size(), 2u);
    if (r.code == kExitProtocolFailure) {
      EXPECT_NE(r.out.find("success 0"), std::string::npos);
      std::filesystem::remove(path);
      return;
    }
  }
  FAIL() << "no failing seed";
}

TEST(Teleport, BadFlag) { EXPECT_EQ(run_cli({"teleport", "--bogus"}).code, kExitConfigError); }

TEST(Sweep, SpecGrid) {
  const CliRun r = run_cli({"sweep-fig1", "--gamma", "0.5", "--rho", "1.5", "--beta", "0.1:0.8:0.05", "--n", "2,5,10",
                         "--samples", "200", "--parallel", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 46u);
  EXPECT_EQ(ls[0], "beta,N,p_eq6,p_closed_form,p_montecarlo");
  std::map<double, std::vector<double>> by_beta;
  int prev_n = 0;
  double prev_beta = -1;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto f = fields(ls[i]);
    ASSERT_EQ(f.size(), 5u);
    const double beta = std::stod(f[0]);
    const int n = std::stoi(f[1]);
    const double eq6 = std::stod(f[2]);
    const double closed = std::stod(f[3]);
    EXPECT_NEAR(eq6, closed, 1e-12);
    // Rows ordered by (N, beta).
    if (n == prev_n) EXPECT_GT(beta, prev_beta);
    else EXPECT_GT(n, prev_n);
    prev_n = n;
    prev_beta = beta;
    by_beta[beta].push_back(eq6);
    if (std::abs(beta - 0.5) < 1e-12 && n == 2) EXPECT_NEAR(eq6, 1.7361e-3, 1e-7);
    if (f[4] != "nan") {
      const double mc = std::stod(f[4]);
      EXPECT_GE(mc, 0.0);
      EXPECT_LE(mc, 1.0);
    }
  }
  EXPECT_EQ(by_beta.size(), 15u);
  for (const auto& [beta, vals] : by_beta) {
    ASSERT_EQ(vals.size(), 3u);
    EXPECT_LT(vals[0], vals[1]);
    EXPECT_LT(vals[1], vals[2]);
  }
}

TEST(Sweep, ParallelDoesNotChangeOutput) {
  const std::vector<std::string> base = {"sweep-fig1", "--beta", "0.3:0.5:0.1", "--n", "2,3", "--samples", "300",
                                         "--seed", "5"};
  auto with = [&](const char* k) {
    auto a = base;
    a.push_back("--parallel");
    a.push_back(k);
    return run_cli(a).out;
  };
  EXPECT_EQ(with("1"), with("4"));
}

TEST(Sweep, InfeasibleBeta) {
  const CliRun r = run_cli({"sweep-fig1", "--beta", "0.5:0.9:0.1", "--samples", "0"});
  EXPECT_EQ(r.code, kExitConfigError);
  EXPECT_NE(r.err.find("infeasible"), std::string::npos);
}

TEST(Sweep, SeventeenDigits) {
  const CliRun r = run_cli({"sweep-fig1", "--beta", "0.5:0.5:0.1", "--n", "2", "--samples", "0"});
  ASSERT_EQ(r.code, 0);
  const auto f = fields(lines(r.out).at(1));
  EXPECT_EQ(f[4], "nan");
  // Round trip through text is exact.
  const double v = std::stod(f[2]);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  EXPECT_EQ(f[2], buf);
}

TEST(Qis, SpecCommand) {
  const CliRun r = run_cli({"qis", "--input", "0.5,0.5,0.5,0.5", "--seed", "11", "--corrections", "synthesized"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("fidelity 1.000000000000"), std::string::npos) << r.out;
}

TEST(Qis, TranscriptIsByteIdentical) {
  const auto p1 = temp_file("qis1.txt"), p2 = temp_file("qis2.txt");
  run_cli({"qis", "--seed", "3", "--transcript", p1.string()});
  run_cli({"qis", "--seed", "3", "--transcript", p2.string()});
  const std::string a = slurp(p1);
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, slurp(p2));
  EXPECT_EQ(parse_transcript(a).messages.size(), 3u);
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST(Qis, BadSource) { EXPECT_EQ(run_cli({"qis", "--corrections", "bogus"}).code, kExitConfigError); }

TEST(VerifyTable1, ReportAndExitCode) {
  const CliRun r = run_cli({"verify-table1"});
  EXPECT_TRUE(r.code == kExitOk || r.code == kExitVerifyMismatch);
  int rows = 0;
  int mismatches = 0;
  for (const auto& l : lines(r.out)) {
    if (l.empty() || l[0] == '#') continue;
    ++rows;
    if (l.find(",MISMATCH,") != std::string::npos) ++mismatches;
  }
  EXPECT_EQ(rows, 64);
  EXPECT_EQ(r.code, mismatches == 0 ? kExitOk : kExitVerifyMismatch);
}

TEST(Eve, SpecCommand) {
  const CliRun r = run_cli({"eve", "--protocol", "teleport"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("max trace distance <= 1e-12, mutual information <= 1e-9 bits"), std::string::npos);
  const CliRun q = run_cli({"eve", "--protocol", "qis", "--bob-label", "3"});
  EXPECT_EQ(q.code, 0) << q.err;
  EXPECT_NE(q.out.find("eve_state UNALTERED"), std::string::npos);
  EXPECT_EQ(run_cli({"eve", "--bob-label", "4"}).code, kExitConfigError);
}

TEST(DishonestBob, Command) {
  const CliRun r = run_cli({"dishonest-bob", "--rounds", "50"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("attack_verdict DISCARD"), std::string::npos);
  EXPECT_NE(r.out.find("honest_verdict ACCEPT"), std::string::npos);
}

TEST(Help, ExitsCleanly) {
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({}).code, kExitConfigError);
}

}  // namespace
}  // namespace clusterqis::cli
