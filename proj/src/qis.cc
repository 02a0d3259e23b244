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

#include "clusterqis/qis.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <regex>
#include <sstream>

#include "clusterqis/errors.h"
#include "clusterqis/rng.h"

namespace clusterqis {

namespace {

constexpr double kWordFidelity = 1.0 - 1e-10;
constexpr double kNegligibleNorm = 1e-24;

// Generic inputs: every amplitude nonzero and distinct, so a word that maps
// all three branches back is the word for the key.
const std::array<TwoInput, 3>& reference_inputs() {
  static const std::array<TwoInput, 3> refs = {
      random_two_input(0x7265662d30ULL), random_two_input(0x7265662d31ULL),
      random_two_input(0x7265662d32ULL)};
  return refs;
}

int bell_index(BellOutcome b) { return static_cast<int>(b); }

BellOutcome bell_at(int code) { return static_cast<BellOutcome>(code & 3); }

// Peels off one Bell measurement in place.
void project_in_place(System& sys, std::string_view x, std::string_view y, BellOutcome b) {
  const QubitPair pr = sys.reg.pair(x, y);
  const std::array<int, 2> gone = {pr.first, pr.second};
  sys = System{project_bell(sys.state, pr, b), sys.reg.without(gone)};
}

Phase nearest_phase(Complex z) {
  Phase best = Phase::kPlusOne;
  double best_re = -1e300;
  for (Phase p : kPhases) {
    const double re = (phase_value(p) * z).real();
    if (re > best_re) {
      best_re = re;
      best = p;
    }
  }
  return best;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// "a|00>+b|01>-c|10>-d|11>" evaluated against an input. Sets `duplicate` to
// the first repeated ket, if any.
std::optional<StateVector> state_from_text(std::string_view text, const TwoInput& in,
                                           std::string& duplicate) {
  static const std::regex term(R"(([+-]?)([abcd])\|([01])([01])>)");
  std::vector<Complex> amps(4);
  std::array<bool, 4> seen{};
  const std::string s(text);
  std::size_t consumed = 0;
  for (auto it = std::sregex_iterator(s.begin(), s.end(), term); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    if (static_cast<std::size_t>(m.position()) != consumed) return std::nullopt;
    consumed += static_cast<std::size_t>(m.length());
    const double sign = m[1] == "-" ? -1.0 : 1.0;
    const int sym = m[2].str()[0] - 'a';
    const int ket = (m[3] == "1" ? 2 : 0) + (m[4] == "1" ? 1 : 0);
    if (seen[ket] && duplicate.empty()) duplicate = "|" + m[3].str() + m[4].str() + ">";
    seen[ket] = true;
    amps[ket] += sign * in.amps[sym];
  }
  if (consumed != s.size()) return std::nullopt;
  return StateVector::from_amplitudes(std::move(amps), false);
}

bool is_bell_text(std::string_view t) {
  return t == "|00>+|11>" || t == "|00>-|11>" || t == "|01>+|10>" || t == "|01>-|10>";
}

}  // namespace

// ---------------------------------------------------------------------------
// Keys and words

int QisKey::index() const {
  return bell_index(alice1) << 4 | bell_index(alice2) << 2 | bell_index(bob);
}

QisKey QisKey::from_index(int index) {
  if (index < 0 || index >= 64) throw ConfigError("QIS key index out of range");
  return QisKey{bell_at(index >> 4), bell_at(index >> 2), bell_at(index)};
}

std::string QisKey::to_string() const {
  return std::string(bell_name(alice1)) + "," + std::string(bell_name(alice2)) + "," +
         std::string(bell_name(bob));
}

std::array<QisKey, 64> all_qis_keys() {
  std::array<QisKey, 64> out;
  for (int i = 0; i < 64; ++i) out[static_cast<std::size_t>(i)] = QisKey::from_index(i);
  return out;
}

char pauli_letter(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

Mat2 pauli_matrix(Pauli p) {
  switch (p) {
    case Pauli::kI: return Mat2::identity();
    case Pauli::kX: return Mat2::pauli_x();
    case Pauli::kY: return Mat2::pauli_y();
    case Pauli::kZ: return Mat2::pauli_z();
  }
  return Mat2::identity();
}

Complex phase_value(Phase p) {
  switch (p) {
    case Phase::kPlusOne: return {1.0, 0.0};
    case Phase::kPlusI: return {0.0, 1.0};
    case Phase::kMinusOne: return {-1.0, 0.0};
    case Phase::kMinusI: return {0.0, -1.0};
  }
  return {1.0, 0.0};
}

Phase phase_product(Phase a, Phase b) {
  return static_cast<Phase>((static_cast<int>(a) + static_cast<int>(b)) % 4);
}

namespace {

Pauli pauli_from_letter(char c) {
  switch (c) {
    case 'I': return Pauli::kI;
    case 'X': return Pauli::kX;
    case 'Y': return Pauli::kY;
    case 'Z': return Pauli::kZ;
    default: throw ConfigError(std::string("not a Pauli letter: '") + c + "'");
  }
}

// Leading "[+|-][i]"; advances `pos`.
Phase read_scalar(std::string_view s, std::size_t& pos) {
  bool neg = false;
  bool imag = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) neg = s[pos++] == '-';
  if (pos < s.size() && s[pos] == 'i') {
    imag = true;
    ++pos;
  }
  if (imag) return neg ? Phase::kMinusI : Phase::kPlusI;
  return neg ? Phase::kMinusOne : Phase::kPlusOne;
}

}  // namespace

std::string CorrectionWord::to_string() const {
  std::string out;
  switch (phase) {
    case Phase::kPlusOne: out = "+"; break;
    case Phase::kPlusI: out = "+i"; break;
    case Phase::kMinusOne: out = "-"; break;
    case Phase::kMinusI: out = "-i"; break;
  }
  out += pauli_letter(left);
  out += pauli_letter(right);
  return out;
}

CorrectionWord CorrectionWord::parse(std::string_view text) {
  std::size_t pos = 0;
  const Phase ph = read_scalar(text, pos);
  if (text.size() - pos != 2) throw ConfigError("malformed correction word '" + std::string(text) + "'");
  return CorrectionWord{ph, pauli_from_letter(text[pos]), pauli_from_letter(text[pos + 1])};
}

CorrectionWord CorrectionWord::from_factors(std::string_view left, std::string_view right) {
  auto factor = [](std::string_view f, Phase& ph) {
    std::size_t pos = 0;
    ph = phase_product(ph, read_scalar(f, pos));
    if (f.size() - pos != 1) throw ConfigError("malformed Pauli factor '" + std::string(f) + "'");
    return pauli_from_letter(f[pos]);
  };
  Phase ph = Phase::kPlusOne;
  const Pauli l = factor(left, ph);
  const Pauli r = factor(right, ph);
  return CorrectionWord{ph, l, r};
}

std::array<Complex, 16> CorrectionWord::matrix() const {
  const Mat2 a = pauli_matrix(left);
  const Mat2 b = pauli_matrix(right);
  const Complex ph = phase_value(phase);
  std::array<Complex, 16> m{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m[r * 4 + c] = ph * a(r >> 1, c >> 1) * b(r & 1, c & 1);
  }
  return m;
}

StateVector apply_correction(const StateVector& two_qubit, const CorrectionWord& w) {
  if (two_qubit.num_qubits() != 2) throw ConfigError("correction words act on two qubits");
  StateVector s = apply_1q(two_qubit, 0, pauli_matrix(w.left));
  s = apply_1q(s, 1, pauli_matrix(w.right));
  return s.scaled(phase_value(w.phase));
}

// ---------------------------------------------------------------------------
// Branch states

StateVector analytic_qis_outcome(const TwoInput& input, const QisKey& key) {
  const double s1 = bell_sign(key.alice1);
  const double s2 = bell_sign(key.alice2);
  const double s3 = bell_sign(key.bob);
  const int t1 = is_phi(key.alice1) ? 0 : 1;
  const int t2 = is_phi(key.alice2) ? 0 : 1;
  const int t3 = is_phi(key.bob) ? 0 : 1;

  // a1 sits on |t1^t3, t2>; b1, c1, d1 on that ket xor 01, 10, 11.
  const int base = ((t1 ^ t3) << 1) | t2;
  std::array<double, 4> sign{};
  switch (t1 << 2 | t2 << 1 | t3) {
    case 0b000:
    case 0b010: sign = {1, s2, -s1 * s3, -s1 * s2 * s3}; break;
    case 0b001:
    case 0b011: sign = {s3, s2 * s3, s1, s1 * s2}; break;
    case 0b100:
    case 0b110: sign = {-s3, -s2 * s3, s1, s1 * s2}; break;
    case 0b101:
    case 0b111: sign = {1, s2, s1 * s3, s1 * s2 * s3}; break;
  }
  std::vector<Complex> amps(4);
  for (int k = 0; k < 4; ++k) amps[static_cast<std::size_t>(base ^ k)] = sign[k] * input.amps[k] / 8.0;
  return StateVector::from_amplitudes(std::move(amps), false);
}

StateVector qis_branch_state(const TwoInput& input, const ClusterParams& p, const QisKey& key) {
  System sys = qis_system(input, p);
  project_in_place(sys, "a", "1", key.alice1);
  project_in_place(sys, "b", "6", key.alice2);
  project_in_place(sys, "2", "3", key.bob);
  return sys.state;
}

// ---------------------------------------------------------------------------
// Correction table

const Table1Row& table1_row(const QisKey& key) {
  for (const auto& r : table1_rows()) {
    if (r.key == key) return r;
  }
  throw ConfigError("no table row for key " + key.to_string());
}

CorrectionWord table1_lookup(const QisKey& key) { return table1_row(key).word(); }

std::vector<CorrectionWord> all_corrections(const StateVector& outcome_state,
                                            const TwoInput& input) {
  std::vector<CorrectionWord> out;
  if (outcome_state.norm_squared() <= kNegligibleNorm) return out;
  const StateVector target = input.state();
  for (Pauli l : kPaulis) {
    for (Pauli r : kPaulis) {
      const StateVector fixed = apply_correction(outcome_state, {Phase::kPlusOne, l, r});
      if (overlap_fidelity(fixed, target) < kWordFidelity) continue;
      for (Phase ph : kPhases) out.push_back(CorrectionWord{ph, l, r});
    }
  }
  return out;
}

std::optional<CorrectionWord> synthesize_correction(const StateVector& outcome_state,
                                                    const TwoInput& input) {
  if (outcome_state.norm_squared() <= kNegligibleNorm) return std::nullopt;
  const StateVector target = input.state();
  for (Pauli l : kPaulis) {
    for (Pauli r : kPaulis) {
      const StateVector fixed = apply_correction(outcome_state, {Phase::kPlusOne, l, r});
      if (overlap_fidelity(fixed, target) < kWordFidelity) continue;
      return CorrectionWord{nearest_phase(inner_product(target, fixed.normalize())), l, r};
    }
  }
  return std::nullopt;
}

namespace {

std::array<std::optional<CorrectionWord>, 64> build_table(const ClusterParams& p) {
  std::array<std::optional<CorrectionWord>, 64> out;
  for (const QisKey& key : all_qis_keys()) {
    std::optional<CorrectionWord> agreed;
    bool ok = true;
    for (const TwoInput& in : reference_inputs()) {
      const auto w = synthesize_correction(qis_branch_state(in, p, key), in);
      if (!w || (agreed && !agreed->equal_up_to_phase(*w))) {
        ok = false;
        break;
      }
      if (!agreed) agreed = w;
    }
    if (ok) out[static_cast<std::size_t>(key.index())] = agreed;
  }
  return out;
}

double worst_fidelity(const QisKey& key, const CorrectionWord& w) {
  double worst = 1.0;
  for (const TwoInput& in : reference_inputs()) {
    const StateVector branch = qis_branch_state(in, ClusterParams::maximal(), key);
    worst = std::min(worst, overlap_fidelity(apply_correction(branch, w), in.state()));
  }
  return worst;
}

}  // namespace

std::array<std::optional<CorrectionWord>, 64> synthesized_correction_table(const ClusterParams& p) {
  if (p.is_maximal()) {
    static const auto maximal = build_table(ClusterParams::maximal());
    return maximal;
  }
  return build_table(p);
}

Table1Report verify_table1() {
  Table1Report report;
  const auto oracle = synthesized_correction_table(ClusterParams::maximal());
  const auto rows = table1_rows();
  std::array<int, 64> hits{};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Table1Row& row = rows[i];
    const std::string where = "row " + std::to_string(i + 1) + " (" + row.key.to_string() + ")";
    ++hits[static_cast<std::size_t>(row.key.index())];

    Table1Report::Row r;
    r.key = row.key;
    r.published = row.word();
    r.oracle = oracle[static_cast<std::size_t>(row.key.index())];
    r.published_fidelity = worst_fidelity(row.key, r.published);
    r.oracle_fidelity = r.oracle ? worst_fidelity(row.key, *r.oracle) : 0.0;
    r.pass = r.oracle && r.published.equal_up_to_phase(*r.oracle) && r.published_fidelity >= kWordFidelity;
    if (!r.pass) ++report.mismatches;
    if (!r.oracle) report.review_notes.push_back(where + ": no Pauli word recovers the input");

    const std::string expect_alice =
        std::string(bell_name(row.key.alice1)) + " " + std::string(bell_name(row.key.alice2));
    if (row.alice_text != expect_alice) {
      report.review_notes.push_back(where + ": Alice column reads \"" + std::string(row.alice_text) +
                                    "\"");
    }
    if (!is_bell_text(row.bob_text)) {
      report.review_notes.push_back(where + ": Bob column reads \"" + std::string(row.bob_text) +
                                    "\", not a Bell state; checked as " +
                                    std::string(bell_name(row.key.bob)));
    }
    const TwoInput& ref = reference_inputs()[0];
    std::string dup;
    const auto printed = state_from_text(row.state_text, ref, dup);
    if (!printed) {
      report.review_notes.push_back(where + ": state column \"" + std::string(row.state_text) +
                                    "\" could not be read");
    } else if (!dup.empty()) {
      report.review_notes.push_back(where + ": state column \"" + std::string(row.state_text) +
                                    "\" lists " + dup + " twice");
    } else {
      const StateVector branch = qis_branch_state(ref, ClusterParams::maximal(), row.key);
      const double f = overlap_fidelity(*printed, branch);
      if (f < kWordFidelity) {
        report.review_notes.push_back(where + ": state column \"" + std::string(row.state_text) +
                                      "\" differs from the oracle branch (overlap " +
                                      fmt("%.6g", f) + ")");
      }
    }
    report.rows.push_back(std::move(r));
  }
  for (int k = 0; k < 64; ++k) {
    if (hits[static_cast<std::size_t>(k)] != 1) {
      report.review_notes.push_back("key " + QisKey::from_index(k).to_string() + " appears " +
                                    std::to_string(hits[static_cast<std::size_t>(k)]) + " times");
    }
  }
  return report;
}

std::string Table1Report::to_text() const {
  std::ostringstream out;
  out << "# alice1,alice2,bob,paper_word,oracle_word,status,published_fidelity,oracle_fidelity\n";
  for (const Row& r : rows) {
    out << bell_name(r.key.alice1) << ',' << bell_name(r.key.alice2) << ',' << bell_name(r.key.bob)
        << ',' << r.published.to_string() << ',' << (r.oracle ? r.oracle->to_string() : "NONE") << ','
        << (r.pass ? "PASS" : "MISMATCH") << ',' << fmt("%.15f", r.published_fidelity) << ','
        << fmt("%.15f", r.oracle_fidelity) << '\n';
  }
  for (const auto& n : review_notes) out << "# review: " << n << '\n';
  const int total = static_cast<int>(rows.size());
  out << "# rows=" << total << " pass=" << total - mismatches << " mismatch=" << mismatches << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Protocol run

std::string_view correction_source_name(CorrectionSource s) {
  return s == CorrectionSource::kTable ? "table" : "synthesized";
}

CorrectionSource correction_source_from_name(std::string_view name) {
  if (name == "table") return CorrectionSource::kTable;
  if (name == "synthesized") return CorrectionSource::kSynthesized;
  throw ConfigError("unknown correction source '" + std::string(name) + "'");
}

QisResult run_qis(const TwoInput& input, std::uint64_t seed, Transport& transport,
                  CorrectionSource source, const ClusterParams& p) {
  input.validate();
  p.validate();
  std::vector<double> params = {p.alpha, p.beta, p.gamma, p.eta};
  for (const Complex& a : input.amps) {
    params.push_back(a.real());
    params.push_back(a.imag());
  }
  ClassicalChannel ch(Protocol::kQis, seed, std::move(params), transport);
  SeedStream seeds(seed);
  System sys = qis_system(input, p);

  auto measure = [&](PartyId who, Stage stage, const char* x, const char* y) {
    const QubitPair pr = sys.reg.pair(x, y);
    const std::array<int, 2> q = {pr.first, pr.second};
    sys.reg.require_owned(who, q);
    const BellSample s = bsm_sample(sys.state, pr, seeds.next());
    sys = System{s.collapsed, sys.reg.without(q)};
    ch.announce(who, stage, {x, y}, s.outcome);
  };
  measure(PartyId::kAlice, Stage::kAliceBsmA1, "a", "1");
  measure(PartyId::kAlice, Stage::kAliceBsmB6, "b", "6");
  measure(PartyId::kBob, Stage::kBobBsm23, "2", "3");

  // Chika: keys the correction on the three announcements in her inbox.
  const std::array<int, 2> mine = {sys.reg.index_of("4"), sys.reg.index_of("5")};
  sys.reg.require_owned(PartyId::kChika, mine);
  std::array<BellOutcome, 3> heard{};
  std::uint64_t cursor = 0;
  constexpr std::array<Stage, 3> order = {Stage::kAliceBsmA1, Stage::kAliceBsmB6, Stage::kBobBsm23};
  for (std::size_t i = 0; i < 3; ++i) {
    const ClassicalMessage m = ch.wait_for(PartyId::kChika, cursor);
    if (m.stage != order[i]) throw ProtocolError("Chika received announcements in the wrong order");
    heard[i] = m.outcome;
    cursor = m.seq;
  }

  QisResult result;
  result.key = QisKey{heard[0], heard[1], heard[2]};
  if (source == CorrectionSource::kTable) {
    result.correction = table1_lookup(result.key);
  } else {
    result.correction = synthesized_correction_table(p)[static_cast<std::size_t>(result.key.index())];
  }
  StateVector out = result.correction ? apply_correction(sys.state, *result.correction) : sys.state;
  result.fidelity = fidelity_pure(out, input.state());
  result.output = std::move(out);
  result.transcript = ch.transcript();
  return result;
}

// ---------------------------------------------------------------------------
// Access structure

namespace {

void accumulate(std::optional<DensityMatrix>& acc, const DensityMatrix& term) {
  acc = acc ? *acc + term : term;
}

struct AccessStates {
  DensityMatrix chika_avg;                  // (4,5), averaged over Alice
  DensityMatrix bob;                        // (2,3), no announcements
  std::vector<DensityMatrix> given_alice;   // per Alice outcome pair
  std::vector<DensityMatrix> all_bits;      // per key, uncorrected
};

AccessStates access_states(const TwoInput& in, const ClusterParams& p) {
  const System sys = qis_system(in, p);
  AccessStates st;
  const std::array<int, 2> bob_q = {sys.reg.index_of("2"), sys.reg.index_of("3")};
  st.bob = partial_trace(sys.state, bob_q);

  std::optional<DensityMatrix> avg;
  for (BellOutcome o1 : kBellOutcomes) {
    for (BellOutcome o2 : kBellOutcomes) {
      System s = sys;
      project_in_place(s, "a", "1", o1);
      project_in_place(s, "b", "6", o2);
      const double w = s.state.norm_squared();
      const std::array<int, 2> chika_q = {s.reg.index_of("4"), s.reg.index_of("5")};
      if (w > kNegligibleNorm) accumulate(avg, partial_trace(s.state, chika_q).scaled(w));

      std::optional<DensityMatrix> given;
      double wsum = 0.0;
      for (BellOutcome o3 : kBellOutcomes) {
        System t = s;
        project_in_place(t, "2", "3", o3);
        const double wb = t.state.norm_squared();
        if (wb <= kNegligibleNorm) {
          st.all_bits.push_back(DensityMatrix::maximally_mixed(2));
          continue;
        }
        const DensityMatrix branch = DensityMatrix::from_pure(t.state);
        st.all_bits.push_back(branch);
        accumulate(given, branch.scaled(wb));
        wsum += wb;
      }
      st.given_alice.push_back(given ? given->scaled(1.0 / wsum) : DensityMatrix::maximally_mixed(2));
    }
  }
  st.chika_avg = avg ? *avg : DensityMatrix::maximally_mixed(2);
  return st;
}

}  // namespace

AccessReport access_structure_check(const TwoInput& first, const TwoInput& second,
                                    const ClusterParams& p) {
  first.validate();
  second.validate();
  p.validate();
  const AccessStates a = access_states(first, p);
  const AccessStates b = access_states(second, p);
  AccessReport r;
  r.chika_distance = trace_distance(a.chika_avg, b.chika_avg);
  r.bob_distance = trace_distance(a.bob, b.bob);
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  r.bob_to_mixed = std::max(trace_distance(a.bob, mixed), trace_distance(b.bob, mixed));
  for (std::size_t i = 0; i < a.given_alice.size(); ++i) {
    r.chika_given_alice_distance =
        std::max(r.chika_given_alice_distance, trace_distance(a.given_alice[i], b.given_alice[i]));
  }
  for (std::size_t i = 0; i < a.all_bits.size(); ++i) {
    r.chika_all_bits_distance =
        std::max(r.chika_all_bits_distance, trace_distance(a.all_bits[i], b.all_bits[i]));
  }
  return r;
}

std::string AccessReport::to_text() const {
  std::ostringstream out;
  out << "chika_distance " << fmt("%.3e", chika_distance) << '\n'
      << "bob_distance " << fmt("%.3e", bob_distance) << '\n'
      << "bob_to_maximally_mixed " << fmt("%.3e", bob_to_mixed) << '\n'
      << "chika_given_alice_distance " << fmt("%.3e", chika_given_alice_distance) << '\n'
      << "chika_all_bits_distance " << fmt("%.3e", chika_all_bits_distance) << '\n'
      << "no_collaboration " << (holds() ? "INPUT_INDEPENDENT" : "INPUT_DEPENDENT") << '\n';
  return out.str();
}

}  // namespace clusterqis
