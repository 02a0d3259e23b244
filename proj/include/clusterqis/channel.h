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

// Channel states (the four-qubit cluster state and Bell pairs), protocol
// inputs, and labeled registers that record which party owns each qubit.

#ifndef CLUSTERQIS_CHANNEL_H
#define CLUSTERQIS_CHANNEL_H

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clusterqis/measurement.h"
#include "clusterqis/state.h"

namespace clusterqis {

/// Coefficients of alpha|0000> + beta|1010> + gamma|0101> - eta|1111>.
struct ClusterParams {
  double alpha = 0.5;
  double beta = 0.5;
  double gamma = 0.5;
  double eta = 0.5;

  /// Throws ConfigError unless all four are nonzero and finite and their
  /// squares sum to 1 within kIdentityTol.
  void validate() const;
  bool is_maximal(double tol = kIdentityTol) const;
  std::array<double, 4> as_array() const { return {alpha, beta, gamma, eta}; }

  static ClusterParams maximal() { return {}; }
};

/// Uniform on the unit 3-sphere, rejecting draws with any |coefficient| < 0.05.
ClusterParams random_cluster_params(std::uint64_t seed);

/// a0|0> + b0|1>.
struct SingleInput {
  Complex a0{1.0, 0.0};
  Complex b0{0.0, 0.0};

  void validate() const;
  StateVector state() const;
};

/// a1|00> + b1|01> + c1|10> + d1|11>.
struct TwoInput {
  std::array<Complex, 4> amps{Complex(1.0, 0.0), 0.0, 0.0, 0.0};

  void validate() const;
  StateVector state() const;
};

SingleInput random_single_input(std::uint64_t seed);
TwoInput random_two_input(std::uint64_t seed);

/// Throws ConfigError on invalid parameters.
StateVector make_cluster(const ClusterParams& p);
StateVector make_bell(BellOutcome kind);

// ---------------------------------------------------------------------------
// Registers

enum class PartyId : std::uint8_t { kAlice, kBob, kChika, kEve };

std::string_view party_name(PartyId p);
PartyId party_from_name(std::string_view name);

struct QubitSlot {
  std::string label;
  PartyId owner;
};

/// Ordered qubit labels with owners. Position in the register is the qubit
/// index in the matching StateVector.
class Register {
 public:
  Register() = default;
  explicit Register(std::vector<QubitSlot> slots);

  int size() const { return static_cast<int>(slots_.size()); }
  const std::vector<QubitSlot>& slots() const { return slots_; }

  /// Throws ConfigError for an unknown label.
  int index_of(std::string_view label) const;
  const std::string& label_of(int index) const;
  PartyId owner_of(int index) const;
  PartyId owner_of(std::string_view label) const { return owner_of(index_of(label)); }
  QubitPair pair(std::string_view a, std::string_view b) const;
  std::vector<int> indices(std::span<const std::string> labels) const;

  /// Throws AccessError if any listed qubit belongs to another party.
  void require_owned(PartyId party, std::span<const int> qubits) const;

  /// Register with the qubits at `removed` dropped (order preserved).
  Register without(std::span<const int> removed) const;
  /// Register with `slot` inserted at `position`.
  Register with_inserted(int position, QubitSlot slot) const;

 private:
  std::vector<QubitSlot> slots_;
};

struct System {
  StateVector state;
  Register reg;
};

struct SystemPart {
  StateVector state;
  std::vector<QubitSlot> slots;
};

/// Tensor product in part order. Throws ConfigError when a part's slot count
/// does not match its qubit count (a gap) or a label repeats (a collision).
System compose_system(std::span<const SystemPart> parts);

/// |input>_A (x) |cluster>_1234. Alice owns A and 1, Bob owns 2 and 3, Chika
/// owns 4.
System teleport_system(const SingleInput& input, const ClusterParams& p);

/// |input>_ab (x) |cluster>_1234 (x) |Phi+>_56. Alice owns a, b, 1, 6; Bob
/// owns 2, 3; Chika owns 4, 5. Register order: a b 1 2 3 4 5 6.
System qis_system(const TwoInput& input, const ClusterParams& p);

/// Reduced state of labeled qubits as seen by a party; enforces ownership.
DensityMatrix party_reduced_state(const System& sys, PartyId party,
                                  std::span<const std::string> labels);

}  // namespace clusterqis

#endif  // CLUSTERQIS_CHANNEL_H
