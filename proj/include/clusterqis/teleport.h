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

// Probabilistic teleportation of one qubit through the cluster channel.
//
// Register: A 1 2 3 4. Alice measures (A,1) in the Bell basis, Bob measures
// (2,3), and Chika recovers the input on qubit 4 with a pre-unitary, an
// ancilla T, a CNOT 4->T and a three-outcome POVM on T.

#ifndef CLUSTERQIS_TELEPORT_H
#define CLUSTERQIS_TELEPORT_H

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "clusterqis/channel.h"
#include "clusterqis/measurement.h"
#include "clusterqis/party.h"
#include "clusterqis/state.h"

namespace clusterqis {

enum class Coefficient : std::uint8_t { kAlpha, kBeta, kGamma, kEta };

std::string_view coefficient_name(Coefficient c);
double coefficient_value(const ClusterParams& p, Coefficient c);

enum class CoeffPair : std::uint8_t { kAlphaEta, kBetaGamma };

enum class PreUnitary : std::uint8_t { kIdentity, kU1 };

std::string_view pre_unitary_name(PreUnitary u);
Mat2 pre_unitary_matrix(PreUnitary u);

/// How Chika turns one (alice, bob) branch back into the input. After the
/// pre-unitary the branch reads, up to a global phase and the 1/2 prefactor,
///   a0 * c(zero)|0> + sign * b0 * c(one)|1>.
/// The POVM is built with gamma = c(zero) and beta = c(one); the outcome that
/// leaves a0|0> - b0|1> on qubit 4 is the one that needs sigma_z.
struct BranchRecipe {
  BellOutcome alice = BellOutcome::kPhiPlus;
  BellOutcome bob = BellOutcome::kPhiPlus;
  CoeffPair coeff_pair = CoeffPair::kAlphaEta;
  PreUnitary pre_unitary = PreUnitary::kIdentity;
  Coefficient zero = Coefficient::kAlpha;
  Coefficient one = Coefficient::kEta;
  int sign = 1;
  PovmOutcome sign_fix = PovmOutcome::kK2;

  PovmSet povm(const ClusterParams& p, double rho) const;
};

/// Closed-form qubit-4 state for one branch, unnormalized: its squared norm
/// is the joint probability of (alice, bob).
StateVector analytic_post_bsm(const SingleInput& input, const ClusterParams& p,
                              BellOutcome alice, BellOutcome bob);

BranchRecipe branch_recipe(BellOutcome alice, BellOutcome bob);

struct RecoveryResult {
  PovmOutcome outcome = PovmOutcome::kK3;
  std::optional<StateVector> state;  // empty when K3 fired

  bool success() const { return state.has_value(); }
};

/// Chika's side. `collapsed` is the one-qubit branch state (normalized or
/// not). Consumes exactly one seed for the POVM draw.
RecoveryResult chika_recover(const StateVector& collapsed, const BranchRecipe& recipe,
                             const ClusterParams& p, double rho, std::uint64_t seed);

/// The state on (4, T) right before the POVM: pre-unitary, ancilla, CNOT.
StateVector chika_pre_povm_state(const StateVector& collapsed, const BranchRecipe& recipe);

struct TrialPlan {
  int max_trials = 1;
  double rho = 1.5;
  ClusterParams cluster;

  /// Throws ConfigError for max_trials < 1, bad cluster parameters, or a rho
  /// for which either branch POVM is invalid (PovmInvalidError).
  void validate() const;
};

struct TrialRecord {
  BellOutcome alice;
  BellOutcome bob;
  PovmOutcome povm;
  bool success;
};

struct TeleportResult {
  bool success = false;
  int trials_used = 0;
  int channels_allocated = 0;
  std::vector<TrialRecord> trials;
  std::vector<PovmOutcome> povm_outcomes;
  double fidelity = 0.0;
  std::optional<StateVector> output;
  Transcript transcript;
};

/// One trial: fresh channel, Alice's BSM and announcement, Bob's BSM and
/// announcement, Chika's recovery keyed on the messages in her inbox.
TeleportResult run_teleport_once(const SingleInput& input, const TrialPlan& plan,
                                 std::uint64_t seed, Transport& transport);

/// Up to plan.max_trials trials, each on a fresh channel, stopping at the
/// first success. Trial t draws from derive_seed(seed, t).
TeleportResult run_teleport_with_retries(const SingleInput& input, const TrialPlan& plan,
                                         std::uint64_t seed, Transport& transport);

/// Sum over M = 1..N-1 of C(N-1, M) (q-1)^(N-M-1) / q^N with q = 2 rho varsigma
/// and varsigma = 1/gamma^2 + 1/beta^2. Throws ConfigError for N < 2 or
/// N > 1000.
double psuc_formula(int n, double beta, double gamma, double rho);

/// (1/q) (1 - ((q-1)/q)^(N-1)).
double psuc_closed_form(int n, double beta, double gamma, double rho);

/// Exact probability that a single trial succeeds, summed over all 16
/// branches: sum of P(branch) * P(K1 or K2 | branch).
double teleport_trial_success_probability(const SingleInput& input, const TrialPlan& plan);

}  // namespace clusterqis

#endif  // CLUSTERQIS_TELEPORT_H
