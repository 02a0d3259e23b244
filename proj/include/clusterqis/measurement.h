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

// Bell-state measurement and the three-element POVM used by the receiver to
// discriminate the two ancilla states produced by the recovery circuit.

#ifndef CLUSTERQIS_MEASUREMENT_H
#define CLUSTERQIS_MEASUREMENT_H

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "clusterqis/state.h"

namespace clusterqis {

/// Bell basis: Phi+- = (|00> +- |11>)/sqrt2, Psi+- = (|01> +- |10>)/sqrt2.
/// The enum value is the 2-bit wire code.
enum class BellOutcome : std::uint8_t {
  kPhiPlus = 0b00,
  kPhiMinus = 0b01,
  kPsiPlus = 0b10,
  kPsiMinus = 0b11,
};

inline constexpr std::array<BellOutcome, 4> kBellOutcomes = {
    BellOutcome::kPhiPlus, BellOutcome::kPhiMinus, BellOutcome::kPsiPlus,
    BellOutcome::kPsiMinus};

/// "00", "01", "10", "11".
std::string_view wire_code(BellOutcome b);
/// Inverse of wire_code; throws ConfigError on anything else.
BellOutcome bell_from_wire(std::string_view code);
/// "Phi+", "Phi-", "Psi+", "Psi-".
std::string_view bell_name(BellOutcome b);
BellOutcome bell_from_name(std::string_view name);

constexpr bool is_phi(BellOutcome b) {
  return b == BellOutcome::kPhiPlus || b == BellOutcome::kPhiMinus;
}
/// +1 for the "+" states, -1 for the "-" states.
constexpr int bell_sign(BellOutcome b) {
  return (static_cast<int>(b) & 1) ? -1 : 1;
}

/// Normalized 4-vector of the Bell state in the |00>,|01>,|10>,|11> basis.
std::array<Complex, 4> bell_vector(BellOutcome b);

using QubitPair = std::pair<int, int>;

/// <B|_pair |psi>: the unnormalized remainder on the other qubits, kept in
/// their original relative order.
StateVector project_bell(const StateVector& state, QubitPair pair, BellOutcome b);

struct BellBranch {
  BellOutcome outcome;
  double probability;
  StateVector remainder;  // unnormalized, squared norm == probability
};

/// All four Bell outcomes for a normalized state.
std::vector<BellBranch> bell_distribution(const StateVector& state, QubitPair pair);

struct BellSample {
  BellOutcome outcome;
  StateVector collapsed;  // remainder, renormalized
  double probability;
};

/// Draws one outcome with a single uniform derived from seed. Zero-probability
/// branches are never returned.
BellSample bsm_sample(const StateVector& state, QubitPair pair, std::uint64_t seed);

// ---------------------------------------------------------------------------
// POVM

enum class PovmOutcome : std::uint8_t { kK1 = 1, kK2 = 2, kK3 = 3 };

inline constexpr std::array<PovmOutcome, 3> kPovmOutcomes = {
    PovmOutcome::kK1, PovmOutcome::kK2, PovmOutcome::kK3};

std::string_view povm_name(PovmOutcome k);

/// K1 = |M1><M1|/rho, K2 = |M2><M2|/rho, K3 = I - K1 - K2 with
///   |M1> = (|0>/gamma + |1>/beta)/sqrt(varsigma),
///   |M2> = (|0>/gamma - |1>/beta)/sqrt(varsigma),
///   varsigma = 1/gamma^2 + 1/beta^2.
/// K1 annihilates gamma|0> - beta|1>, K2 annihilates gamma|0> + beta|1>.
class PovmSet {
 public:
  /// Throws ConfigError for a zero coefficient or rho <= 0, and
  /// PovmInvalidError when K3 has an eigenvalue below -kIdentityTol.
  static PovmSet construct(double beta, double gamma, double rho);

  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  double rho() const { return rho_; }
  double varsigma() const { return varsigma_; }

  const std::array<Complex, 2>& m1() const { return m1_; }
  const std::array<Complex, 2>& m2() const { return m2_; }
  const Mat2& element(PovmOutcome k) const;
  /// Operator square root of the element (the Kraus operator used for
  /// collapse).
  const Mat2& kraus(PovmOutcome k) const;
  double k3_min_eigenvalue() const { return k3_min_eig_; }

 private:
  PovmSet() = default;

  double beta_ = 0, gamma_ = 0, rho_ = 0, varsigma_ = 0;
  std::array<Complex, 2> m1_{}, m2_{};
  std::array<Mat2, 3> elements_{};
  std::array<Mat2, 3> kraus_{};
  double k3_min_eig_ = 0;
};

inline PovmSet construct_povm(double beta, double gamma, double rho) {
  return PovmSet::construct(beta, gamma, rho);
}

/// Smallest eigenvalue of K3 in closed form: 1 - 2 max(b^2, g^2)/(rho (b^2 + g^2)).
double povm_k3_min_eigenvalue(double beta, double gamma, double rho);

/// Smallest rho for which K3 is PSD: 2 max(b^2, g^2)/(b^2 + g^2).
double povm_min_rho(double beta, double gamma);

/// <psi|K_i|psi> (unnormalized; divide by the squared norm for a probability).
double povm_weight(const StateVector& state, int target, const PovmSet& povm, PovmOutcome k);

/// P(K1), P(K2), P(K3) for the renormalized state.
std::array<double, 3> povm_probabilities(const StateVector& state, int target,
                                         const PovmSet& povm);

/// sqrt(K_i) applied to the target qubit, unnormalized.
StateVector povm_collapse(const StateVector& state, int target, const PovmSet& povm,
                          PovmOutcome k);

struct PovmSample {
  PovmOutcome outcome;
  StateVector collapsed;  // renormalized
  double probability;
};

PovmSample povm_sample(const StateVector& state, int target, const PovmSet& povm,
                       std::uint64_t seed);

}  // namespace clusterqis

#endif  // CLUSTERQIS_MEASUREMENT_H
