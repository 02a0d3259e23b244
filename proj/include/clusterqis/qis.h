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

// Splitting a two-qubit state among Alice, Bob and Chika.
//
// Register: a b 1 2 3 4 5 6. Alice measures (a,1) then (b,6), Bob measures
// (2,3), and Chika applies a two-qubit Pauli word to (4,5).

#ifndef CLUSTERQIS_QIS_H
#define CLUSTERQIS_QIS_H

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clusterqis/channel.h"
#include "clusterqis/measurement.h"
#include "clusterqis/party.h"
#include "clusterqis/state.h"

namespace clusterqis {

/// Outcomes on (a,1), (b,6) and (2,3).
struct QisKey {
  BellOutcome alice1 = BellOutcome::kPhiPlus;
  BellOutcome alice2 = BellOutcome::kPhiPlus;
  BellOutcome bob = BellOutcome::kPhiPlus;

  /// wire(alice1) << 4 | wire(alice2) << 2 | wire(bob), in [0, 64).
  int index() const;
  static QisKey from_index(int index);
  /// "Phi+,Phi-,Psi+".
  std::string to_string() const;

  friend bool operator==(const QisKey&, const QisKey&) = default;
};

std::array<QisKey, 64> all_qis_keys();

enum class Pauli : std::uint8_t { kI, kX, kY, kZ };

inline constexpr std::array<Pauli, 4> kPaulis = {Pauli::kI, Pauli::kX, Pauli::kY, Pauli::kZ};

char pauli_letter(Pauli p);
Mat2 pauli_matrix(Pauli p);

/// Powers of i.
enum class Phase : std::uint8_t { kPlusOne, kPlusI, kMinusOne, kMinusI };

inline constexpr std::array<Phase, 4> kPhases = {Phase::kPlusOne, Phase::kPlusI, Phase::kMinusOne,
                                                 Phase::kMinusI};

Complex phase_value(Phase p);
Phase phase_product(Phase a, Phase b);

/// phase * (left (x) right); left acts on qubit 4, right on qubit 5.
/// Text form is a sign, an optional i, then the two letters: "+ZI", "-iYZ".
struct CorrectionWord {
  Phase phase = Phase::kPlusOne;
  Pauli left = Pauli::kI;
  Pauli right = Pauli::kI;

  std::string to_string() const;
  /// Throws ConfigError on malformed text.
  static CorrectionWord parse(std::string_view text);
  /// Builds a word from two factors that each may carry a scalar, e.g.
  /// ("-iY", "Z") or ("-X", "iY").
  static CorrectionWord from_factors(std::string_view left, std::string_view right);

  /// Row-major 4x4 matrix in the |00>,|01>,|10>,|11> basis.
  std::array<Complex, 16> matrix() const;
  bool equal_up_to_phase(const CorrectionWord& other) const {
    return left == other.left && right == other.right;
  }

  friend bool operator==(const CorrectionWord&, const CorrectionWord&) = default;
};

StateVector apply_correction(const StateVector& two_qubit, const CorrectionWord& w);

/// Closed-form (4,5) state for a key with the maximal cluster: 1/8 times a
/// signed permutation of (a1, b1, c1, d1).
StateVector analytic_qis_outcome(const TwoInput& input, const QisKey& key);

/// Remainder on (4,5) after projecting the full eight-qubit system onto the
/// three Bell outcomes. Unnormalized; squared norm is the key's probability.
StateVector qis_branch_state(const TwoInput& input, const ClusterParams& p, const QisKey& key);

/// One row of the published correction table, kept as printed. `key` is the
/// outcome the row is tested under; it differs from the printed Bob column
/// only where that column is not a Bell state.
struct Table1Row {
  QisKey key;
  std::string_view alice_text;  // "Phi+ Phi-"
  std::string_view bob_text;    // "|00>+|11>"
  std::string_view state_text;  // "a|00>+b|01>-c|10>-d|11>"
  std::string_view left_text;   // "-iY"
  std::string_view right_text;  // "Z"

  CorrectionWord word() const { return CorrectionWord::from_factors(left_text, right_text); }
};

/// All 64 rows in printed order.
std::span<const Table1Row> table1_rows();
const Table1Row& table1_row(const QisKey& key);
CorrectionWord table1_lookup(const QisKey& key);

/// Searches the 16 Pauli words and 4 phases for one that maps the branch to
/// the input with fidelity >= 1 - 1e-10. The phase returned is the one that
/// best aligns the corrected branch with the input.
std::optional<CorrectionWord> synthesize_correction(const StateVector& outcome_state,
                                                    const TwoInput& input);

/// Every phased word achieving the fidelity bound (used for uniqueness checks).
std::vector<CorrectionWord> all_corrections(const StateVector& outcome_state,
                                            const TwoInput& input);

/// Per-key words synthesized from oracle branches of fixed reference inputs.
/// Entries are empty where no single word works for every reference input.
std::array<std::optional<CorrectionWord>, 64> synthesized_correction_table(const ClusterParams& p);

struct Table1Report {
  struct Row {
    QisKey key;
    CorrectionWord published;
    std::optional<CorrectionWord> oracle;
    double published_fidelity = 0.0;   // worst case over reference inputs
    double oracle_fidelity = 0.0;  // worst case over reference inputs
    bool pass = false;
  };
  std::vector<Row> rows;
  std::vector<std::string> review_notes;
  int mismatches = 0;

  bool all_pass() const { return mismatches == 0; }
  /// Header, one line per key, '#' review notes, summary.
  std::string to_text() const;
};

Table1Report verify_table1();

enum class CorrectionSource : std::uint8_t { kTable, kSynthesized };

std::string_view correction_source_name(CorrectionSource s);
CorrectionSource correction_source_from_name(std::string_view name);

struct QisResult {
  QisKey key;
  std::optional<CorrectionWord> correction;
  double fidelity = 0.0;
  std::optional<StateVector> output;
  Transcript transcript;
};

/// Three BSMs and announcements, then Chika's correction keyed on her inbox.
/// Consumes one seed per BSM.
QisResult run_qis(const TwoInput& input, std::uint64_t seed, Transport& transport,
                  CorrectionSource source, const ClusterParams& p = ClusterParams::maximal());

struct AccessReport {
  /// Chika's (4,5) state averaged over Alice's outcomes, input 1 vs input 2.
  double chika_distance = 0.0;
  /// Bob's (2,3) state before any announcement, input 1 vs input 2.
  double bob_distance = 0.0;
  /// Bob's (2,3) state against I/4 (worst of the two inputs).
  double bob_to_mixed = 0.0;
  /// Largest distance between inputs once Alice's announcements are known
  /// but Bob has said nothing (averaged over Bob's outcomes).
  double chika_given_alice_distance = 0.0;
  /// Largest distance between inputs once every outcome is known but the
  /// correction has not been applied.
  double chika_all_bits_distance = 0.0;

  bool holds(double tol = kIdentityTol) const {
    return chika_distance <= tol && bob_distance <= tol;
  }
  std::string to_text() const;
};

AccessReport access_structure_check(const TwoInput& first, const TwoInput& second,
                                    const ClusterParams& p = ClusterParams::maximal());

}  // namespace clusterqis

#endif  // CLUSTERQIS_QIS_H
