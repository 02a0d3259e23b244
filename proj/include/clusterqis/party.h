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

// Classical side of the protocols: parties announce Bell-measurement results
// over a transport; a per-run channel enforces the stage order and keeps a
// transcript that can be written to and read back from text.
//
// Transcript text format (UTF-8, LF line endings):
//
//   #protocol=<name> seed=<u64> params=<csv>
//   <seq>|<sender>|<stage>|<label>,<label>|<2-bit outcome code>
//   ...

#ifndef CLUSTERQIS_PARTY_H
#define CLUSTERQIS_PARTY_H

#include <condition_variable>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clusterqis/channel.h"
#include "clusterqis/measurement.h"

namespace clusterqis {

enum class Stage : std::uint8_t { kAliceBsmA1, kAliceBsmB6, kBobBsm23 };

std::string_view stage_name(Stage s);
Stage stage_from_name(std::string_view name);
/// The only party allowed to announce a stage.
PartyId stage_sender(Stage s);

enum class Protocol : std::uint8_t { kTeleport, kQis };

std::string_view protocol_name(Protocol p);
Protocol protocol_from_name(std::string_view name);

struct ClassicalMessage {
  std::uint64_t seq = 0;
  PartyId sender = PartyId::kAlice;
  Stage stage = Stage::kAliceBsmA1;
  std::pair<std::string, std::string> pair;
  BellOutcome outcome = BellOutcome::kPhiPlus;

  friend bool operator==(const ClassicalMessage&, const ClassicalMessage&) = default;
};

struct Transcript {
  std::string protocol;
  std::uint64_t seed = 0;
  std::vector<double> params;
  std::vector<ClassicalMessage> messages;

  std::string run_id() const;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

/// Doubles are written with 17 significant digits so parsing is exact.
std::string serialize_transcript(const Transcript& t);
/// Throws ParseError carrying the 1-based line number.
Transcript parse_transcript(std::string_view text);

/// Accepts messages in order and aborts on anything else. Teleport runs
/// repeat [ALICE_BSM_A1, BOB_BSM_23] once per trial; QIS runs are exactly
/// [ALICE_BSM_A1, ALICE_BSM_B6, BOB_BSM_23].
class StageMachine {
 public:
  explicit StageMachine(Protocol protocol) : protocol_(protocol) {}

  /// Throws ProtocolError if `s` is not the next expected stage.
  void advance(Stage s);
  std::optional<Stage> expected() const;
  bool at_trial_boundary() const { return position_ == 0; }

 private:
  Protocol protocol_;
  std::size_t position_ = 0;
  bool finished_ = false;
};

/// Point-to-point delivery of announcements. Implementations must be safe to
/// call from several threads.
class Transport {
 public:
  virtual ~Transport() = default;

  /// Returns false when the message was not delivered.
  virtual bool deliver(PartyId recipient, const ClassicalMessage& msg) = 0;
  virtual std::vector<ClassicalMessage> inbox(PartyId recipient) const = 0;
};

/// Synchronous, ordered, lossless. The fault modes exist to exercise the
/// abort paths.
class InMemoryTransport : public Transport {
 public:
  enum class Fault { kNone, kDropSeq, kDelaySeq };

  InMemoryTransport() = default;
  /// kDropSeq loses every delivery of message `seq`; kDelaySeq holds it back
  /// and delivers it after the next message.
  InMemoryTransport(Fault fault, std::uint64_t seq) : fault_(fault), fault_seq_(seq) {}

  bool deliver(PartyId recipient, const ClassicalMessage& msg) override;
  std::vector<ClassicalMessage> inbox(PartyId recipient) const override;

 private:
  mutable std::mutex mu_;
  std::map<PartyId, std::vector<ClassicalMessage>> inboxes_;
  std::map<PartyId, ClassicalMessage> held_;
  Fault fault_ = Fault::kNone;
  std::uint64_t fault_seq_ = 0;
};

struct Ack {
  std::uint64_t seq;
  std::vector<PartyId> recipients;
};

/// One protocol run's classical channel. Appends are serialized; the
/// transcript order is the total order of delivery.
class ClassicalChannel {
 public:
  ClassicalChannel(Protocol protocol, std::uint64_t seed, std::vector<double> params,
                   Transport& transport);

  /// Validates the message (sender is a legitimate party and matches the
  /// stage, seq strictly increases, stage order), delivers it to every other
  /// legitimate party and appends it to the transcript. Each recipient's inbox
  /// must end with this message in seq order, otherwise the run aborts.
  Ack broadcast(const ClassicalMessage& msg);

  /// Convenience: allocates the next seq number.
  Ack announce(PartyId sender, Stage stage, std::pair<std::string, std::string> pair,
               BellOutcome outcome);

  /// Blocks until a message with seq > after_seq is present in `party`'s
  /// inbox; returns it. Used by threaded parties.
  ClassicalMessage wait_for(PartyId party, std::uint64_t after_seq) const;

  Transcript transcript() const;
  std::uint64_t last_seq() const;

 private:
  mutable std::mutex mu_;
  mutable std::condition_variable cv_;
  Transport& transport_;
  StageMachine machine_;
  Transcript transcript_;
  std::uint64_t last_seq_ = 0;
};

}  // namespace clusterqis

#endif  // CLUSTERQIS_PARTY_H
