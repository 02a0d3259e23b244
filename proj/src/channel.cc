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

#include "clusterqis/channel.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include "clusterqis/errors.h"
#include "clusterqis/rng.h"

namespace clusterqis {

namespace {

constexpr double kMinClusterCoefficient = 0.05;

// Standard normal via Box-Muller from two derived uniforms.
double normal_draw(SeedStream& s) {
  const double u1 = std::max(uniform01(s.next()), 0x1.0p-60);
  const double u2 = uniform01(s.next());
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

void ClusterParams::validate() const {
  for (double c : as_array()) {
    if (!std::isfinite(c)) throw ConfigError("cluster coefficient is not finite");
    if (c == 0.0) throw ConfigError("cluster coefficients must be nonzero");
  }
  const double s = alpha * alpha + beta * beta + gamma * gamma + eta * eta;
  if (std::abs(s - 1.0) > kIdentityTol) {
    throw ConfigError("cluster coefficients violate normalization: squares sum to " +
                      std::to_string(s));
  }
}

bool ClusterParams::is_maximal(double tol) const {
  return std::ranges::all_of(as_array(), [tol](double c) { return std::abs(c - 0.5) <= tol; });
}

ClusterParams random_cluster_params(std::uint64_t seed) {
  SeedStream s(seed);
  for (;;) {
    std::array<double, 4> v{};
    double n2 = 0.0;
    for (double& x : v) {
      x = normal_draw(s);
      n2 += x * x;
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (double& x : v) x *= inv;
    if (std::ranges::all_of(v, [](double x) { return std::abs(x) >= kMinClusterCoefficient; })) {
      ClusterParams p{v[0], v[1], v[2], v[3]};
      p.validate();
      return p;
    }
  }
}

void SingleInput::validate() const {
  const double n = std::norm(a0) + std::norm(b0);
  if (std::abs(n - 1.0) > kIdentityTol) {
    throw ConfigError("input amplitudes are not normalized: |a0|^2+|b0|^2 = " + std::to_string(n));
  }
}

StateVector SingleInput::state() const {
  validate();
  return StateVector::from_amplitudes({a0, b0}, true);
}

void TwoInput::validate() const {
  double n = 0.0;
  for (const Complex& a : amps) n += std::norm(a);
  if (std::abs(n - 1.0) > kIdentityTol) {
    throw ConfigError("input amplitudes are not normalized: sum of squares = " + std::to_string(n));
  }
}

StateVector TwoInput::state() const {
  validate();
  return StateVector::from_amplitudes({amps.begin(), amps.end()}, true);
}

SingleInput random_single_input(std::uint64_t seed) {
  SeedStream s(seed);
  std::array<Complex, 2> v{};
  double n2 = 0.0;
  for (Complex& z : v) {
    z = Complex(normal_draw(s), normal_draw(s));
    n2 += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(n2);
  return SingleInput{v[0] * inv, v[1] * inv};
}

TwoInput random_two_input(std::uint64_t seed) {
  SeedStream s(seed);
  TwoInput in;
  double n2 = 0.0;
  for (Complex& z : in.amps) {
    z = Complex(normal_draw(s), normal_draw(s));
    n2 += std::norm(z);
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (Complex& z : in.amps) z *= inv;
  return in;
}

StateVector make_cluster(const ClusterParams& p) {
  p.validate();
  std::vector<Complex> amps(16);
  amps[0b0000] = p.alpha;
  amps[0b1010] = p.beta;
  amps[0b0101] = p.gamma;
  amps[0b1111] = -p.eta;
  return StateVector::from_amplitudes(std::move(amps), true);
}

StateVector make_bell(BellOutcome kind) {
  const auto v = bell_vector(kind);
  return StateVector::from_amplitudes({v.begin(), v.end()}, true);
}

// ---------------------------------------------------------------------------
// Registers

std::string_view party_name(PartyId p) {
  switch (p) {
    case PartyId::kAlice: return "Alice";
    case PartyId::kBob: return "Bob";
    case PartyId::kChika: return "Chika";
    case PartyId::kEve: return "Eve";
  }
  return "?";
}

PartyId party_from_name(std::string_view name) {
  for (PartyId p : {PartyId::kAlice, PartyId::kBob, PartyId::kChika, PartyId::kEve}) {
    if (party_name(p) == name) return p;
  }
  throw ConfigError("unknown party '" + std::string(name) + "'");
}

Register::Register(std::vector<QubitSlot> slots) : slots_(std::move(slots)) {
  std::set<std::string> seen;
  for (const auto& s : slots_) {
    if (!seen.insert(s.label).second) throw ConfigError("duplicate qubit label '" + s.label + "'");
  }
}

int Register::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i].label == label) return static_cast<int>(i);
  }
  throw ConfigError("unknown qubit label '" + std::string(label) + "'");
}

const std::string& Register::label_of(int index) const { return slots_.at(static_cast<std::size_t>(index)).label; }

PartyId Register::owner_of(int index) const { return slots_.at(static_cast<std::size_t>(index)).owner; }

QubitPair Register::pair(std::string_view a, std::string_view b) const {
  return {index_of(a), index_of(b)};
}

std::vector<int> Register::indices(std::span<const std::string> labels) const {
  std::vector<int> out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(index_of(l));
  return out;
}

void Register::require_owned(PartyId party, std::span<const int> qubits) const {
  for (int q : qubits) {
    if (owner_of(q) != party) {
      throw AccessError(std::string(party_name(party)) + " does not own qubit " + label_of(q) +
                        " (owner: " + std::string(party_name(owner_of(q))) + ")");
    }
  }
}

Register Register::without(std::span<const int> removed) const {
  std::vector<QubitSlot> out;
  for (int i = 0; i < size(); ++i) {
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) {
      out.push_back(slots_[static_cast<std::size_t>(i)]);
    }
  }
  return Register(std::move(out));
}

Register Register::with_inserted(int position, QubitSlot slot) const {
  if (position < 0 || position > size()) throw ConfigError("insert position out of range");
  std::vector<QubitSlot> out = slots_;
  out.insert(out.begin() + position, std::move(slot));
  return Register(std::move(out));
}

System compose_system(std::span<const SystemPart> parts) {
  if (parts.empty()) throw ConfigError("compose_system needs at least one part");
  StateVector state = parts.front().state;
  std::vector<QubitSlot> slots;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& part = parts[i];
    if (static_cast<int>(part.slots.size()) != part.state.num_qubits()) {
      throw ConfigError("part " + std::to_string(i) + " has " + std::to_string(part.state.num_qubits()) +
                        " qubits but " + std::to_string(part.slots.size()) + " labels");
    }
    if (i > 0) state = tensor(state, part.state);
    slots.insert(slots.end(), part.slots.begin(), part.slots.end());
  }
  return System{std::move(state), Register(std::move(slots))};
}

System teleport_system(const SingleInput& input, const ClusterParams& p) {
  const std::array<SystemPart, 2> parts = {
      SystemPart{input.state(), {{"A", PartyId::kAlice}}},
      SystemPart{make_cluster(p),
                 {{"1", PartyId::kAlice}, {"2", PartyId::kBob}, {"3", PartyId::kBob}, {"4", PartyId::kChika}}},
  };
  return compose_system(parts);
}

System qis_system(const TwoInput& input, const ClusterParams& p) {
  const std::array<SystemPart, 3> parts = {
      SystemPart{input.state(), {{"a", PartyId::kAlice}, {"b", PartyId::kAlice}}},
      SystemPart{make_cluster(p),
                 {{"1", PartyId::kAlice}, {"2", PartyId::kBob}, {"3", PartyId::kBob}, {"4", PartyId::kChika}}},
      SystemPart{make_bell(BellOutcome::kPhiPlus), {{"5", PartyId::kChika}, {"6", PartyId::kAlice}}},
  };
  return compose_system(parts);
}

DensityMatrix party_reduced_state(const System& sys, PartyId party,
                                  std::span<const std::string> labels) {
  const std::vector<int> idx = sys.reg.indices(labels);
  sys.reg.require_owned(party, idx);
  return partial_trace(sys.state, idx);
}

}  // namespace clusterqis
