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

// Command-line front end. Subcommands: teleport, sweep-fig1, qis,
// verify-table1, eve, dishonest-bob.

#ifndef CLUSTERQIS_TOOLS_CLI_H
#define CLUSTERQIS_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "clusterqis/channel.h"
#include "clusterqis/state.h"

namespace clusterqis::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitProtocolFailure = 1,
  kExitConfigError = 2,
  kExitVerifyMismatch = 3,
};

/// Comma-separated reals. Throws ConfigError on anything that is not a
/// finite number.
std::vector<double> parse_reals(std::string_view csv);
std::vector<int> parse_ints(std::string_view csv);

/// `count` amplitudes given either as 2*count values (re,im pairs) or as
/// `count` real values. Normalization must hold within 1e-9 unless
/// `renormalize` is set.
std::vector<Complex> parse_amplitudes(std::string_view csv, std::size_t count, bool renormalize);

SingleInput parse_single_input(std::string_view csv, bool renormalize);
TwoInput parse_two_input(std::string_view csv, bool renormalize);
ClusterParams parse_cluster(std::string_view csv);

/// "lo:hi:step", inclusive of hi up to rounding.
std::vector<double> parse_range(std::string_view spec);

struct SweepConfig {
  double gamma = 0.5;
  double rho = 1.5;
  std::vector<double> betas;
  std::vector<int> trials;
  int samples = 2000;  // Monte Carlo runs per grid point; 0 disables the column
  std::uint64_t seed = 0;
  int parallel = 1;
  SingleInput input;

  /// Throws ConfigError when a beta leaves no room for the other
  /// coefficients (beta^2 + gamma^2 >= 1) or any value is out of range.
  void validate() const;
};

/// CSV `beta,N,p_eq6,p_closed_form,p_montecarlo`, rows ordered by (N, beta).
/// The Monte Carlo column uses the cluster with alpha = eta filling the
/// remaining weight and is "nan" where that cluster admits no valid POVM.
std::string sweep_fig1_csv(const SweepConfig& config);

/// Parses argv and dispatches. Never throws; returns one of ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clusterqis::cli

#endif  // CLUSTERQIS_TOOLS_CLI_H
