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

#include "clusterqis/security.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "clusterqis/errors.h"
#include "clusterqis/rng.h"

namespace clusterqis {

namespace {

constexpr double kNegligibleNorm = 1e-24;

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

System attach_eve(const System& sys, const AttackConfig& attack) {
  const int pos = sys.reg.index_of(attack.bob_label);
  const int n = sys.reg.size();
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n) + 1);
  for (int q = 0; q <= pos; ++q) order.push_back(q);
  order.push_back(n);
  for (int q = pos + 1; q < n; ++q) order.push_back(q);
  StateVector state = permute_qubits(tensor(sys.state, attack.eve_state), order);
  if (attack.attachment == Attachment::kCnotFromBob) state = apply_cnot(state, pos, pos + 1);
  return System{std::move(state), sys.reg.with_inserted(pos + 1, {"E", PartyId::kEve})};
}

void project_in_place(System& sys, std::string_view x, std::string_view y, BellOutcome b) {
  const QubitPair pr = sys.reg.pair(x, y);
  const std::array<int, 2> gone = {pr.first, pr.second};
  sys = System{project_bell(sys.state, pr, b), sys.reg.without(gone)};
}

BellOutcome sample_in_place(System& sys, std::string_view x, std::string_view y,
                            std::uint64_t seed, std::string& path) {
  const QubitPair pr = sys.reg.pair(x, y);
  const std::array<int, 2> gone = {pr.first, pr.second};
  const BellSample s = bsm_sample(sys.state, pr, seed);
  sys = System{s.collapsed, sys.reg.without(gone)};
  if (!path.empty()) path += ',';
  path += bell_name(s.outcome);
  return s.outcome;
}

StateVector in_label_order(const System& sys, std::span<const std::string> labels) {
  return permute_qubits(sys.state, sys.reg.indices(labels));
}

EveBranch eve_branch(const System& remainder, std::string outcome, const DensityMatrix& eve0,
                     std::span<const std::string> receiver) {
  EveBranch br;
  br.outcome = std::move(outcome);
  br.probability = remainder.state.norm_squared();
  if (br.probability <= kNegligibleNorm) {
    br.eve = eve0;
    return br;
  }
  const std::array<int, 1> e = {remainder.reg.index_of("E")};
  const std::vector<int> r = remainder.reg.indices(receiver);
  br.eve = partial_trace(remainder.state, e);
  br.trace_distance = trace_distance(br.eve, eve0);
  br.mutual_information = std::max(0.0, mutual_information(remainder.state, r, e));
  return br;
}

void summarize(LeakageReport& rep) {
  for (const auto& b : rep.branches) {
    rep.max_trace_distance = std::max(rep.max_trace_distance, b.trace_distance);
    rep.max_mutual_information = std::max(rep.max_mutual_information, b.mutual_information);
  }
}

std::string outcome_label(std::initializer_list<BellOutcome> outs) {
  std::string s;
  for (BellOutcome b : outs) {
    if (!s.empty()) s += ',';
    s += bell_name(b);
  }
  return s;
}

}  // namespace

std::string_view attachment_name(Attachment a) {
  return a == Attachment::kTensor ? "tensor" : "cnot";
}

Attachment attachment_from_name(std::string_view name) {
  if (name == "tensor") return Attachment::kTensor;
  if (name == "cnot") return Attachment::kCnotFromBob;
  throw ConfigError("unknown attachment '" + std::string(name) + "'");
}

StateVector AttackConfig::default_eve_state() {
  const double h = std::numbers::sqrt2 / 2;
  return StateVector::from_amplitudes({h, h}, true);
}

void AttackConfig::validate() const {
  if (eve_state.num_qubits() != 1) throw ConfigError("Eve's state must be a single qubit");
  if (!eve_state.normalized()) throw ConfigError("Eve's state must be normalized");
  if (bob_label != "2" && bob_label != "3") {
    throw ConfigError("Eve attaches to Bob's qubit 2 or 3, not '" + bob_label + "'");
  }
}

LeakageReport run_teleport_with_eve(const SingleInput& input, const ClusterParams& p,
                                    std::uint64_t seed, const AttackConfig& attack) {
  attack.validate();
  const System clean = teleport_system(input, p);
  const System sys = attach_eve(clean, attack);
  const DensityMatrix eve0 = DensityMatrix::from_pure(attack.eve_state);
  const std::array<std::string, 1> receiver = {"4"};

  LeakageReport rep;
  rep.protocol = Protocol::kTeleport;
  rep.attachment = attack.attachment;
  rep.bob_label = attack.bob_label;
  double tv = 0.0;
  for (BellOutcome a : kBellOutcomes) {
    for (BellOutcome b : kBellOutcomes) {
      System s = sys;
      project_in_place(s, "A", "1", a);
      project_in_place(s, "2", "3", b);
      System c = clean;
      project_in_place(c, "A", "1", a);
      project_in_place(c, "2", "3", b);
      EveBranch br = eve_branch(s, outcome_label({a, b}), eve0, receiver);
      tv += std::abs(br.probability - c.state.norm_squared());
      rep.branches.push_back(std::move(br));
    }
  }
  rep.outcome_tv_distance = 0.5 * tv;

  // Post-Alice state of (2,3,4,E) against its Bell expansion over (2,3):
  // (1/2) sum_k |B_k>_23 (x) |v_k>_4 (x) |eve>_E.
  const std::array<std::string, 4> order = {"2", "3", "4", "E"};
  const Complex a0 = input.a0;
  const Complex b0 = input.b0;
  for (BellOutcome a : {BellOutcome::kPhiPlus, BellOutcome::kPhiMinus}) {
    const double sa = bell_sign(a);
    System s = sys;
    project_in_place(s, "A", "1", a);
    const StateVector actual = in_label_order(s, order);
    const std::array<std::pair<BellOutcome, std::array<Complex, 2>>, 4> terms = {{
        {BellOutcome::kPhiPlus, {a0 * p.alpha, -sa * b0 * p.eta}},
        {BellOutcome::kPhiMinus, {a0 * p.alpha, sa * b0 * p.eta}},
        {BellOutcome::kPsiPlus, {sa * b0 * p.beta, a0 * p.gamma}},
        {BellOutcome::kPsiMinus, {sa * b0 * p.beta, -a0 * p.gamma}},
    }};
    std::vector<Complex> amps(16);
    for (const auto& [bell, v] : terms) {
      const StateVector t = tensor(tensor(make_bell(bell), StateVector::from_amplitudes(
                                                               {v[0], v[1]}, false)),
                                   attack.eve_state);
      for (std::size_t i = 0; i < 16; ++i) amps[i] += 0.5 * t[i];
    }
    const StateVector expected = StateVector::from_amplitudes(std::move(amps), false);
    rep.factorization_error = std::max(rep.factorization_error, actual.max_abs_diff(expected));
  }

  SeedStream seeds(seed);
  System s = sys;
  sample_in_place(s, "A", "1", seeds.next(), rep.sampled_path);
  sample_in_place(s, "2", "3", seeds.next(), rep.sampled_path);
  summarize(rep);
  return rep;
}

LeakageReport run_qis_with_eve(const TwoInput& input, std::uint64_t seed,
                               const AttackConfig& attack) {
  attack.validate();
  const ClusterParams p = ClusterParams::maximal();
  const System clean = qis_system(input, p);
  const System sys = attach_eve(clean, attack);
  const DensityMatrix eve0 = DensityMatrix::from_pure(attack.eve_state);
  const std::array<std::string, 2> receiver = {"4", "5"};
  const std::array<std::string, 3> order = {"4", "5", "E"};

  LeakageReport rep;
  rep.protocol = Protocol::kQis;
  rep.attachment = attack.attachment;
  rep.bob_label = attack.bob_label;
  double tv = 0.0;
  for (const QisKey& key : all_qis_keys()) {
    System s = sys;
    project_in_place(s, "a", "1", key.alice1);
    project_in_place(s, "b", "6", key.alice2);
    project_in_place(s, "2", "3", key.bob);
    EveBranch br = eve_branch(s, key.to_string(), eve0, receiver);
    tv += std::abs(br.probability - qis_branch_state(input, p, key).norm_squared());
    if (is_phi(key.alice1) && is_phi(key.alice2) && key.bob == BellOutcome::kPhiPlus) {
      const StateVector expected = tensor(analytic_qis_outcome(input, key), attack.eve_state);
      rep.factorization_error =
          std::max(rep.factorization_error, distance_up_to_phase(in_label_order(s, order), expected));
    }
    rep.branches.push_back(std::move(br));
  }
  rep.outcome_tv_distance = 0.5 * tv;

  SeedStream seeds(seed);
  System s = sys;
  sample_in_place(s, "a", "1", seeds.next(), rep.sampled_path);
  sample_in_place(s, "b", "6", seeds.next(), rep.sampled_path);
  sample_in_place(s, "2", "3", seeds.next(), rep.sampled_path);
  summarize(rep);
  return rep;
}

std::string LeakageReport::to_text() const {
  std::ostringstream out;
  out << "protocol " << protocol_name(protocol) << '\n'
      << "attachment " << attachment_name(attachment) << " after qubit " << bob_label << '\n'
      << "# outcome,probability,eve_trace_distance,mutual_information_bits\n";
  for (const auto& b : branches) {
    out << b.outcome << ',' << fmt("%.17g", b.probability) << ',' << fmt("%.3e", b.trace_distance)
        << ',' << fmt("%.3e", b.mutual_information) << '\n';
  }
  out << "max_trace_distance " << fmt("%.3e", max_trace_distance) << '\n'
      << "max_mutual_information_bits " << fmt("%.3e", max_mutual_information) << '\n'
      << "outcome_tv_distance " << fmt("%.3e", outcome_tv_distance) << '\n'
      << "factorization_error " << fmt("%.3e", factorization_error) << '\n'
      << "sampled_path " << sampled_path << '\n'
      << "eve_state " << (eve_unaltered() ? "UNALTERED" : "DISTURBED") << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Dishonest Bob

namespace {

// The QIS register with qubits 4 and 5 swapped for halves of Bell pairs that
// Bob prepared; the genuine channel qubits stay with him as x4 and x5.
System substituted_system(const TwoInput& input) {
  const std::array<SystemPart, 5> parts = {
      SystemPart{input.state(), {{"a", PartyId::kAlice}, {"b", PartyId::kAlice}}},
      SystemPart{make_cluster(ClusterParams::maximal()),
                 {{"1", PartyId::kAlice}, {"2", PartyId::kBob}, {"3", PartyId::kBob}, {"x4", PartyId::kBob}}},
      SystemPart{make_bell(BellOutcome::kPhiPlus), {{"x5", PartyId::kBob}, {"6", PartyId::kAlice}}},
      SystemPart{make_bell(BellOutcome::kPhiPlus), {{"4", PartyId::kChika}, {"y4", PartyId::kBob}}},
      SystemPart{make_bell(BellOutcome::kPhiPlus), {{"5", PartyId::kChika}, {"y5", PartyId::kBob}}},
  };
  return compose_system(parts);
}

DensityMatrix chika_received(const System& sys) {
  const std::array<std::string, 2> mine = {"4", "5"};
  return party_reduced_state(sys, PartyId::kChika, mine);
}

}  // namespace

DishonestBobReport dishonest_bob_substitution(const TwoInput& input, std::uint64_t seed,
                                              int rounds) {
  if (rounds < 1) throw ConfigError("rounds must be at least 1");
  input.validate();
  const auto table = synthesized_correction_table(ClusterParams::maximal());

  DishonestBobReport rep;
  rep.rounds = rounds;
  rep.honest_min_fidelity = std::numeric_limits<double>::infinity();
  rep.attack_min_fidelity = std::numeric_limits<double>::infinity();
  rep.attack_max_fidelity = -std::numeric_limits<double>::infinity();
  double honest_sum = 0.0;
  double attack_sum = 0.0;
  for (int r = 0; r < rounds; ++r) {
    SeedStream rs(derive_seed(seed, static_cast<std::uint64_t>(r)));
    const TwoInput test = r == 0 ? input : random_two_input(rs.next());

    InMemoryTransport transport;
    const QisResult honest = run_qis(test, rs.next(), transport, CorrectionSource::kSynthesized);
    honest_sum += honest.fidelity;
    rep.honest_min_fidelity = std::min(rep.honest_min_fidelity, honest.fidelity);

    System sys = substituted_system(test);
    std::string path;
    const BellOutcome o1 = sample_in_place(sys, "a", "1", rs.next(), path);
    const BellOutcome o2 = sample_in_place(sys, "b", "6", rs.next(), path);
    const BellOutcome o3 = sample_in_place(sys, "2", "3", rs.next(), path);
    const DensityMatrix rho = chika_received(sys);
    const QisKey key{o1, o2, o3};
    const auto& word = table[static_cast<std::size_t>(key.index())];
    // <psi| W rho W^dag |psi> = <W^dag psi| rho |W^dag psi>; Paulis are Hermitian.
    const StateVector probe =
        word ? apply_correction(test.state(), {Phase::kPlusOne, word->left, word->right}) : test.state();
    const double f = rho.expectation(probe);
    attack_sum += f;
    rep.attack_min_fidelity = std::min(rep.attack_min_fidelity, f);
    rep.attack_max_fidelity = std::max(rep.attack_max_fidelity, f);
  }
  rep.honest_mean_fidelity = honest_sum / rounds;
  rep.attack_mean_fidelity = attack_sum / rounds;
  rep.honest_accepted = rep.honest_min_fidelity >= kDetectionThreshold;
  rep.attack_accepted = rep.attack_min_fidelity >= kDetectionThreshold;

  const TwoInput other = random_two_input(derive_seed(seed, 0xB0BULL));
  rep.attack_input_dependence =
      trace_distance(chika_received(substituted_system(input)), chika_received(substituted_system(other)));
  return rep;
}

std::string DishonestBobReport::to_text() const {
  std::ostringstream out;
  out << "rounds " << rounds << '\n'
      << "honest_mean_fidelity " << fmt("%.12f", honest_mean_fidelity) << '\n'
      << "honest_min_fidelity " << fmt("%.12f", honest_min_fidelity) << '\n'
      << "honest_verdict " << (honest_accepted ? "ACCEPT" : "DISCARD") << '\n'
      << "attack_mean_fidelity " << fmt("%.12f", attack_mean_fidelity) << '\n'
      << "attack_min_fidelity " << fmt("%.12f", attack_min_fidelity) << '\n'
      << "attack_max_fidelity " << fmt("%.12f", attack_max_fidelity) << '\n'
      << "attack_verdict " << (attack_accepted ? "ACCEPT" : "DISCARD") << '\n'
      << "attack_input_dependence " << fmt("%.3e", attack_input_dependence) << '\n';
  return out.str();
}

}  // namespace clusterqis
