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

// Eavesdropping and dishonest-participant scenarios.
//
// Eve adds one qubit E next to one of Bob's qubits. By default E is simply
// tensored on in (|0>+|1>)/sqrt(2); a CNOT from Bob's qubit onto E is offered
// as an extra attack that goes beyond the tensor model.

#ifndef CLUSTERQIS_SECURITY_H
#define CLUSTERQIS_SECURITY_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusterqis/channel.h"
#include "clusterqis/party.h"
#include "clusterqis/qis.h"
#include "clusterqis/state.h"

namespace clusterqis {

enum class Attachment : std::uint8_t {
  kTensor,       // E is tensored on and never touched
  kCnotFromBob,  // extension: CNOT from Bob's qubit onto E after attaching
};

std::string_view attachment_name(Attachment a);
Attachment attachment_from_name(std::string_view name);

struct AttackConfig {
  Protocol protocol = Protocol::kTeleport;
  StateVector eve_state = default_eve_state();
  /// E is inserted right after this qubit; must belong to Bob ("2" or "3").
  std::string bob_label = "2";
  Attachment attachment = Attachment::kTensor;

  /// Throws ConfigError for a non-normalized or multi-qubit Eve state or a
  /// label Bob does not own.
  void validate() const;

  static StateVector default_eve_state();
};

struct EveBranch {
  std::string outcome;  // "Phi+,Psi-" or "Phi+,Phi+,Psi+"
  double probability = 0.0;
  DensityMatrix eve;
  double trace_distance = 0.0;
  double mutual_information = 0.0;
};

struct LeakageReport {
  Protocol protocol = Protocol::kTeleport;
  Attachment attachment = Attachment::kTensor;
  std::string bob_label;
  std::vector<EveBranch> branches;
  double max_trace_distance = 0.0;
  double max_mutual_information = 0.0;
  /// Total variation distance between the legitimate outcome distributions
  /// with and without Eve.
  double outcome_tv_distance = 0.0;
  /// Largest deviation between the attacked branch state and the predicted
  /// product form (see run_teleport_with_eve / run_qis_with_eve).
  double factorization_error = 0.0;
  /// One outcome path drawn with the seed, for the transcript-style summary.
  std::string sampled_path;

  bool eve_unaltered(double trace_tol = kIdentityTol, double mi_tol = 1e-9) const {
    return max_trace_distance <= trace_tol && max_mutual_information <= mi_tol;
  }
  std::string to_text() const;
};

/// Register A 1 2 3 4 plus E. For all 16 (Alice, Bob) outcomes: Eve's reduced
/// state, its trace distance from her initial state and I(E : 4). The
/// factorization error compares the post-Alice, pre-Bob state of (2,3,4,E)
/// for Alice's Phi+ and Phi- outcomes with its Bell-basis expansion over
/// (2,3).
LeakageReport run_teleport_with_eve(const SingleInput& input, const ClusterParams& p,
                                    std::uint64_t seed, const AttackConfig& attack = {});

/// Register a b 1 2 3 4 5 6 plus E, maximal cluster. For all 64 keys: Eve's
/// reduced state, trace distance and I(E : 4 5). The factorization error
/// compares the (4,5,E) state for the eight keys with Alice in Phi+/- twice
/// and Bob in Phi+ against analytic_qis_outcome (x) (|0>+|1>)/sqrt(2).
LeakageReport run_qis_with_eve(const TwoInput& input, std::uint64_t seed,
                               const AttackConfig& attack = {});

struct DishonestBobReport {
  int rounds = 0;
  double honest_mean_fidelity = 0.0;
  double honest_min_fidelity = 0.0;
  double attack_mean_fidelity = 0.0;
  double attack_min_fidelity = 0.0;
  double attack_max_fidelity = 0.0;
  /// Trace distance between Chika's received (4,5) states for two different
  /// inputs under the attack.
  double attack_input_dependence = 0.0;
  bool honest_accepted = false;
  bool attack_accepted = false;

  std::string to_text() const;
};

/// Fidelity below this on a verification round discards the run.
inline constexpr double kDetectionThreshold = 1.0 - 1e-6;

/// Bob hands Chika halves of Bell pairs he prepared instead of the channel
/// qubits 4 and 5. Runs `rounds` verification rounds with known test inputs
/// (the first one is `input`) both honestly and under the attack; Chika
/// applies the synthesized correction for the announced key.
DishonestBobReport dishonest_bob_substitution(const TwoInput& input, std::uint64_t seed,
                                              int rounds = 1000);

}  // namespace clusterqis

#endif  // CLUSTERQIS_SECURITY_H
