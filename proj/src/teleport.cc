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

#include "clusterqis/teleport.h"

#include <cmath>

#include "clusterqis/errors.h"
#include "clusterqis/rng.h"

namespace clusterqis {

namespace {

constexpr int kMaxPsucTrials = 1000;

double varsigma(double beta, double gamma) { return 1.0 / (gamma * gamma) + 1.0 / (beta * beta); }

void check_psuc_args(int n, double beta, double gamma, double rho) {
  if (n < 2) throw ConfigError("N must be at least 2");
  if (n > kMaxPsucTrials) throw ConfigError("N must be at most " + std::to_string(kMaxPsucTrials));
  if (!std::isfinite(beta) || !std::isfinite(gamma) || beta == 0.0 || gamma == 0.0) {
    throw ConfigError("beta and gamma must be finite and nonzero");
  }
  if (!std::isfinite(rho) || rho <= 0.0) throw ConfigError("rho must be positive");
}

// Chika's view of a trial: the two announcements she received after `cursor`.
std::pair<BellOutcome, BellOutcome> read_announcements(const ClassicalChannel& ch,
                                                       std::uint64_t& cursor) {
  const ClassicalMessage first = ch.wait_for(PartyId::kChika, cursor);
  const ClassicalMessage second = ch.wait_for(PartyId::kChika, first.seq);
  if (first.stage != Stage::kAliceBsmA1 || second.stage != Stage::kBobBsm23) {
    throw ProtocolError("Chika received announcements in the wrong order");
  }
  cursor = second.seq;
  return {first.outcome, second.outcome};
}

struct TrialOutcome {
  TrialRecord record;
  std::optional<StateVector> output;
};

TrialOutcome run_trial(const SingleInput& input, const TrialPlan& plan, std::uint64_t trial_seed,
                       ClassicalChannel& ch, std::uint64_t& chika_cursor) {
  SeedStream seeds(trial_seed);
  System sys = teleport_system(input, plan.cluster);

  // Alice: BSM on (A,1).
  const QubitPair a_pair = sys.reg.pair("A", "1");
  sys.reg.require_owned(PartyId::kAlice, std::array{a_pair.first, a_pair.second});
  const BellSample alice = bsm_sample(sys.state, a_pair, seeds.next());
  sys = System{alice.collapsed, sys.reg.without(std::array{a_pair.first, a_pair.second})};
  ch.announce(PartyId::kAlice, Stage::kAliceBsmA1, {"A", "1"}, alice.outcome);

  // Bob: BSM on (2,3).
  const QubitPair b_pair = sys.reg.pair("2", "3");
  sys.reg.require_owned(PartyId::kBob, std::array{b_pair.first, b_pair.second});
  const BellSample bob = bsm_sample(sys.state, b_pair, seeds.next());
  sys = System{bob.collapsed, sys.reg.without(std::array{b_pair.first, b_pair.second})};
  ch.announce(PartyId::kBob, Stage::kBobBsm23, {"2", "3"}, bob.outcome);

  // Chika: only qubit 4 is left, and she keys the recipe on what she heard.
  sys.reg.require_owned(PartyId::kChika, std::array{sys.reg.index_of("4")});
  const auto [heard_alice, heard_bob] = read_announcements(ch, chika_cursor);
  const BranchRecipe recipe = branch_recipe(heard_alice, heard_bob);
  RecoveryResult rec = chika_recover(sys.state, recipe, plan.cluster, plan.rho, seeds.next());

  return TrialOutcome{TrialRecord{alice.outcome, bob.outcome, rec.outcome, rec.success()},
                      std::move(rec.state)};
}

TeleportResult run_trials(const SingleInput& input, const TrialPlan& plan, std::uint64_t seed,
                          Transport& transport, int max_trials) {
  plan.validate();
  input.validate();
  const ClusterParams& c = plan.cluster;
  ClassicalChannel ch(Protocol::kTeleport, seed,
                      {c.alpha, c.beta, c.gamma, c.eta, plan.rho, static_cast<double>(max_trials),
                       input.a0.real(), input.a0.imag(), input.b0.real(), input.b0.imag()},
                      transport);
  TeleportResult result;
  std::uint64_t cursor = ch.last_seq();
  for (int t = 0; t < max_trials; ++t) {
    ++result.channels_allocated;
    TrialOutcome out = run_trial(input, plan, derive_seed(seed, static_cast<std::uint64_t>(t)), ch,
                                 cursor);
    result.trials.push_back(out.record);
    result.povm_outcomes.push_back(out.record.povm);
    result.trials_used = t + 1;
    if (out.output) {
      result.success = true;
      result.fidelity = fidelity_pure(*out.output, input.state());
      result.output = std::move(out.output);
      break;
    }
  }
  result.transcript = ch.transcript();
  return result;
}

}  // namespace

std::string_view coefficient_name(Coefficient c) {
  switch (c) {
    case Coefficient::kAlpha: return "alpha";
    case Coefficient::kBeta: return "beta";
    case Coefficient::kGamma: return "gamma";
    case Coefficient::kEta: return "eta";
  }
  return "?";
}

double coefficient_value(const ClusterParams& p, Coefficient c) {
  switch (c) {
    case Coefficient::kAlpha: return p.alpha;
    case Coefficient::kBeta: return p.beta;
    case Coefficient::kGamma: return p.gamma;
    case Coefficient::kEta: return p.eta;
  }
  return 0.0;
}

std::string_view pre_unitary_name(PreUnitary u) { return u == PreUnitary::kIdentity ? "I" : "U1"; }

Mat2 pre_unitary_matrix(PreUnitary u) {
  return u == PreUnitary::kIdentity ? Mat2::identity() : Mat2::u1();
}

PovmSet BranchRecipe::povm(const ClusterParams& p, double rho) const {
  return construct_povm(coefficient_value(p, one), coefficient_value(p, zero), rho);
}

StateVector analytic_post_bsm(const SingleInput& input, const ClusterParams& p, BellOutcome alice,
                              BellOutcome bob) {
  const double sa = bell_sign(alice);
  const double sb = bell_sign(bob);
  const Complex a0 = input.a0;
  const Complex b0 = input.b0;
  Complex zero, one;
  if (is_phi(alice) && is_phi(bob)) {
    zero = a0 * p.alpha;
    one = -sa * sb * b0 * p.eta;
  } else if (is_phi(alice)) {
    zero = sb * b0 * p.beta;
    one = sa * a0 * p.gamma;
  } else if (is_phi(bob)) {
    zero = sb * b0 * p.alpha;
    one = -sa * a0 * p.eta;
  } else {
    zero = a0 * p.beta;
    one = sa * sb * b0 * p.gamma;
  }
  return StateVector::from_amplitudes({0.5 * zero, 0.5 * one}, false);
}

BranchRecipe branch_recipe(BellOutcome alice, BellOutcome bob) {
  const int sab = bell_sign(alice) * bell_sign(bob);
  BranchRecipe r;
  r.alice = alice;
  r.bob = bob;
  r.coeff_pair = is_phi(bob) ? CoeffPair::kAlphaEta : CoeffPair::kBetaGamma;
  if (is_phi(alice) && is_phi(bob)) {
    r.pre_unitary = PreUnitary::kIdentity;
    r.zero = Coefficient::kAlpha;
    r.one = Coefficient::kEta;
    r.sign = -sab;
  } else if (is_phi(alice)) {
    r.pre_unitary = PreUnitary::kU1;
    r.zero = Coefficient::kGamma;
    r.one = Coefficient::kBeta;
    r.sign = -sab;
  } else if (is_phi(bob)) {
    r.pre_unitary = PreUnitary::kU1;
    r.zero = Coefficient::kEta;
    r.one = Coefficient::kAlpha;
    r.sign = sab;
  } else {
    r.pre_unitary = PreUnitary::kIdentity;
    r.zero = Coefficient::kBeta;
    r.one = Coefficient::kGamma;
    r.sign = sab;
  }
  // K1 leaves a0|0> + sign b0|1>, K2 leaves a0|0> - sign b0|1>.
  r.sign_fix = r.sign > 0 ? PovmOutcome::kK2 : PovmOutcome::kK1;
  return r;
}

StateVector chika_pre_povm_state(const StateVector& collapsed, const BranchRecipe& recipe) {
  if (collapsed.num_qubits() != 1) throw ConfigError("Chika expects a one-qubit branch state");
  const StateVector turned = apply_1q(collapsed, 0, pre_unitary_matrix(recipe.pre_unitary));
  const StateVector with_ancilla = tensor(turned, basis_state(1, 0));
  return apply_cnot(with_ancilla, 0, 1);
}

RecoveryResult chika_recover(const StateVector& collapsed, const BranchRecipe& recipe,
                             const ClusterParams& p, double rho, std::uint64_t seed) {
  const PovmSet povm = recipe.povm(p, rho);
  const StateVector pre = chika_pre_povm_state(collapsed, recipe);
  const PovmSample s = povm_sample(pre, 1, povm, seed);
  RecoveryResult out;
  out.outcome = s.outcome;
  if (s.outcome == PovmOutcome::kK3) return out;

  // T is left in |M_k>; read qubit 4 off by contracting T against it.
  const auto& m = s.outcome == PovmOutcome::kK1 ? povm.m1() : povm.m2();
  std::vector<Complex> q4(2);
  for (std::size_t j = 0; j < 2; ++j) {
    q4[j] = std::conj(m[0]) * s.collapsed[2 * j] + std::conj(m[1]) * s.collapsed[2 * j + 1];
  }
  StateVector state = StateVector::from_amplitudes(std::move(q4), false).normalize();
  if (s.outcome == recipe.sign_fix) state = apply_1q(state, 0, Mat2::pauli_z());
  out.state = std::move(state);
  return out;
}

void TrialPlan::validate() const {
  if (max_trials < 1) throw ConfigError("number of trials must be at least 1");
  cluster.validate();
  if (!std::isfinite(rho) || rho <= 0.0) throw ConfigError("rho must be positive");
  construct_povm(cluster.eta, cluster.alpha, rho);
  construct_povm(cluster.beta, cluster.gamma, rho);
}

TeleportResult run_teleport_once(const SingleInput& input, const TrialPlan& plan,
                                 std::uint64_t seed, Transport& transport) {
  return run_trials(input, plan, seed, transport, 1);
}

TeleportResult run_teleport_with_retries(const SingleInput& input, const TrialPlan& plan,
                                         std::uint64_t seed, Transport& transport) {
  return run_trials(input, plan, seed, transport, plan.max_trials);
}

double psuc_formula(int n, double beta, double gamma, double rho) {
  check_psuc_args(n, beta, gamma, rho);
  const double q = 2.0 * rho * varsigma(beta, gamma);
  // (q-1)^(N-M-1) / q^N split as ((q-1)/q)^(N-M-1) * q^-(M+1) to stay finite.
  const double ratio = (q - 1.0) / q;
  double binom = 1.0;  // C(N-1, M), updated incrementally
  double sum = 0.0;
  for (int m = 1; m <= n - 1; ++m) {
    binom = binom * (n - m) / m;
    sum += binom * std::pow(ratio, n - m - 1) * std::pow(q, -(m + 1));
  }
  return sum;
}

double psuc_closed_form(int n, double beta, double gamma, double rho) {
  check_psuc_args(n, beta, gamma, rho);
  const double q = 2.0 * rho * varsigma(beta, gamma);
  return (1.0 - std::pow((q - 1.0) / q, n - 1)) / q;
}

double teleport_trial_success_probability(const SingleInput& input, const TrialPlan& plan) {
  plan.validate();
  double total = 0.0;
  for (BellOutcome a : kBellOutcomes) {
    for (BellOutcome b : kBellOutcomes) {
      const BranchRecipe r = branch_recipe(a, b);
      const PovmSet povm = r.povm(plan.cluster, plan.rho);
      const StateVector pre = chika_pre_povm_state(analytic_post_bsm(input, plan.cluster, a, b), r);
      total += povm_weight(pre, 1, povm, PovmOutcome::kK1) + povm_weight(pre, 1, povm, PovmOutcome::kK2);
    }
  }
  return total;
}

}  // namespace clusterqis
