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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "clusterqis/errors.h"
#include "clusterqis/party.h"

namespace clusterqis {
namespace {

ClassicalMessage msg(std::uint64_t seq, PartyId sender, Stage stage, std::string a, std::string b,
                     BellOutcome o = BellOutcome::kPhiPlus) {
  return ClassicalMessage{seq, sender, stage, {std::move(a), std::move(b)}, o};
}

TEST(Broadcast, DeliversToOtherParties) {
  InMemoryTransport t;
  ClassicalChannel ch(Protocol::kTeleport, 1, {}, t);
  const Ack ack = ch.broadcast(msg(1, PartyId::kAlice, Stage::kAliceBsmA1, "A", "1"));
  EXPECT_EQ(ack.seq, 1u);
  EXPECT_EQ(ack.recipients, (std::vector<PartyId>{PartyId::kBob, PartyId::kChika}));
  EXPECT_EQ(t.inbox(PartyId::kBob).size(), 1u);
  EXPECT_EQ(t.inbox(PartyId::kChika).size(), 1u);
  EXPECT_TRUE(t.inbox(PartyId::kAlice).empty());
  EXPECT_TRUE(t.inbox(PartyId::kEve).empty());
}

TEST(Broadcast, RejectsBobFirstInQis) {
  InMemoryTransport t;
  ClassicalChannel ch(Protocol::kQis, 1, {}, t);
  EXPECT_THROW(ch.broadcast(msg(1, PartyId::kBob, Stage::kBobBsm23, "2", "3")), ProtocolError);
}

TEST(Broadcast, RejectsEveAndWrongSender) {
  InMemoryTransport t;
  ClassicalChannel ch(Protocol::kQis, 1, {}, t);
  EXPECT_THROW(ch.broadcast(msg(1, PartyId::kEve, Stage::kAliceBsmA1, "a", "1")), ProtocolError);
  EXPECT_THROW(ch.broadcast(msg(1, PartyId::kBob, Stage::kAliceBsmA1, "a", "1")), ProtocolError);
  EXPECT_THROW(ch.broadcast(msg(1, PartyId::kChika, Stage::kAliceBsmA1, "a", "1")), ProtocolError);
}

TEST(Broadcast, RejectsNonIncreasingSeq) {
  InMemoryTransport t;
  ClassicalChannel ch(Protocol::kQis, 1, {}, t);
  ch.broadcast(msg(5, PartyId::kAlice, Stage::kAliceBsmA1, "a", "1"));
  EXPECT_THROW(ch.broadcast(msg(5, PartyId::kAlice, Stage::kAliceBsmB6, "b", "6")), ProtocolError);
  EXPECT_THROW(ch.broadcast(msg(3, PartyId::kAlice, Stage::kAliceBsmB6, "b", "6")), ProtocolError);
  EXPECT_NO_THROW(ch.broadcast(msg(6, PartyId::kAlice, Stage::kAliceBsmB6, "b", "6")));
}

TEST(StageMachine, TeleportCycles) {
  StageMachine m(Protocol::kTeleport);
  for (int trial = 0; trial < 3; ++trial) {
    EXPECT_TRUE(m.at_trial_boundary());
    m.advance(Stage::kAliceBsmA1);
    EXPECT_THROW(m.advance(Stage::kAliceBsmA1), ProtocolError);
    m.advance(Stage::kBobBsm23);
  }
  EXPECT_THROW(m.advance(Stage::kAliceBsmB6), ProtocolError);
}

TEST(StageMachine, QisRunsExactlyOnce) {
  StageMachine m(Protocol::kQis);
  m.advance(Stage::kAliceBsmA1);
  EXPECT_THROW(m.advance(Stage::kBobBsm23), ProtocolError);
  StageMachine ok(Protocol::kQis);
  ok.advance(Stage::kAliceBsmA1);
  ok.advance(Stage::kAliceBsmB6);
  ok.advance(Stage::kBobBsm23);
  EXPECT_FALSE(ok.expected().has_value());
  EXPECT_THROW(ok.advance(Stage::kAliceBsmA1), ProtocolError);
}

TEST(Faults, DroppedMessageAbortsRun) {
  InMemoryTransport t(InMemoryTransport::Fault::kDropSeq, 1);
  ClassicalChannel ch(Protocol::kTeleport, 1, {}, t);
  EXPECT_THROW(ch.announce(PartyId::kAlice, Stage::kAliceBsmA1, {"A", "1"}, BellOutcome::kPhiPlus), ProtocolError);
}

TEST(Faults, DelayedMessageAbortsRun) {
  InMemoryTransport t(InMemoryTransport::Fault::kDelaySeq, 1);
  ClassicalChannel ch(Protocol::kQis, 1, {}, t);
  EXPECT_THROW(ch.announce(PartyId::kAlice, Stage::kAliceBsmA1, {"a", "1"}, BellOutcome::kPhiPlus), ProtocolError);
}

// Random interleavings of independent runs: every non-sender sees every
// message exactly once, in seq order.
TEST(Delivery, ExactlyOnceInOrder) {
  std::mt19937_64 rng(31);
  for (int run = 0; run < 50; ++run) {
    InMemoryTransport t;
    ClassicalChannel ch(Protocol::kTeleport, static_cast<std::uint64_t>(run), {}, t);
    const int trials = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < trials; ++k) {
      ch.announce(PartyId::kAlice, Stage::kAliceBsmA1, {"A", "1"}, static_cast<BellOutcome>(rng() % 4));
      ch.announce(PartyId::kBob, Stage::kBobBsm23, {"2", "3"}, static_cast<BellOutcome>(rng() % 4));
    }
    const auto chika = t.inbox(PartyId::kChika);
    ASSERT_EQ(chika.size(), static_cast<std::size_t>(2 * trials));
    for (std::size_t i = 0; i < chika.size(); ++i) EXPECT_EQ(chika[i].seq, i + 1);
    EXPECT_EQ(t.inbox(PartyId::kAlice).size(), static_cast<std::size_t>(trials));
    EXPECT_EQ(t.inbox(PartyId::kBob).size(), static_cast<std::size_t>(trials));
    EXPECT_EQ(ch.transcript().messages, chika);
  }
}

TEST(Delivery, ThreadedPartiesSeeTotalOrder) {
  InMemoryTransport t;
  ClassicalChannel ch(Protocol::kQis, 9, {}, t);
  std::vector<ClassicalMessage> seen;
  std::thread chika([&] {
    std::uint64_t last = 0;
    for (int i = 0; i < 3; ++i) {
      seen.push_back(ch.wait_for(PartyId::kChika, last));
      last = seen.back().seq;
    }
  });
  std::thread bob([&] {
    const ClassicalMessage second = [&] {
      ClassicalMessage m = ch.wait_for(PartyId::kBob, 0);
      while (m.stage != Stage::kAliceBsmB6) m = ch.wait_for(PartyId::kBob, m.seq);
      return m;
    }();
    ch.announce(PartyId::kBob, Stage::kBobBsm23, {"2", "3"}, BellOutcome::kPsiMinus);
    (void)second;
  });
  ch.announce(PartyId::kAlice, Stage::kAliceBsmA1, {"a", "1"}, BellOutcome::kPhiMinus);
  ch.announce(PartyId::kAlice, Stage::kAliceBsmB6, {"b", "6"}, BellOutcome::kPsiPlus);
  bob.join();
  chika.join();
  ASSERT_EQ(seen.size(), 3u);
  EXPECT_EQ(seen[0].stage, Stage::kAliceBsmA1);
  EXPECT_EQ(seen[1].stage, Stage::kAliceBsmB6);
  EXPECT_EQ(seen[2].stage, Stage::kBobBsm23);
  EXPECT_EQ(seen[2].outcome, BellOutcome::kPsiMinus);
}

Transcript random_transcript(std::mt19937_64& rng) {
  Transcript t;
  t.protocol = rng() % 2 ? "teleport" : "qis";
  t.seed = rng();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int np = static_cast<int>(rng() % 8);
  for (int i = 0; i < np; ++i) t.params.push_back(u(rng) * std::pow(10.0, static_cast<double>(rng() % 20) - 10));
  std::uint64_t seq = 0;
  const int nm = static_cast<int>(rng() % 7);
  for (int i = 0; i < nm; ++i) {
    seq += 1 + rng() % 3;
    const bool bob = rng() % 2;
    t.messages.push_back(msg(seq, bob ? PartyId::kBob : PartyId::kAlice,
                             bob ? Stage::kBobBsm23 : (rng() % 2 ? Stage::kAliceBsmA1 : Stage::kAliceBsmB6),
                             bob ? "2" : "a", bob ? "3" : "1", static_cast<BellOutcome>(rng() % 4)));
  }
  return t;
}

TEST(Transcript, RoundTripRandomized) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    const Transcript t = random_transcript(rng);
    const std::string text = serialize_transcript(t);
    EXPECT_EQ(parse_transcript(text), t) << text;
    EXPECT_EQ(serialize_transcript(parse_transcript(text)), text);
  }
}

TEST(Transcript, SingleTeleportRunFormat) {
  InMemoryTransport t;
  ClassicalChannel ch(Protocol::kTeleport, 7, {0.5, 0.25}, t);
  ch.announce(PartyId::kAlice, Stage::kAliceBsmA1, {"A", "1"}, BellOutcome::kPhiMinus);
  ch.announce(PartyId::kBob, Stage::kBobBsm23, {"2", "3"}, BellOutcome::kPsiPlus);
  const std::string text = serialize_transcript(ch.transcript());
  EXPECT_EQ(text,
            "#protocol=teleport seed=7 params=0.5,0.25\n"
            "1|Alice|ALICE_BSM_A1|A,1|01\n"
            "2|Bob|BOB_BSM_23|2,3|10\n");
  EXPECT_EQ(ch.transcript().run_id(), "teleport-7");
}

TEST(Transcript, MalformedOutcomeReportsLine) {
  const std::string text =
      "#protocol=qis seed=1 params=\n"
      "1|Alice|ALICE_BSM_A1|a,1|00\n"
      "2|Alice|ALICE_BSM_B6|b,6|07\n";
  try {
    parse_transcript(text);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Transcript, OtherParseErrors) {
  EXPECT_THROW(parse_transcript(""), ParseError);
  EXPECT_THROW(parse_transcript("protocol=qis\n"), ParseError);
  const std::string head = "#protocol=qis seed=1 params=\n";
  EXPECT_THROW(parse_transcript(head + "1|Eve|ALICE_BSM_A1|a,1|00\n"), ParseError);
  EXPECT_THROW(parse_transcript(head + "1|Bob|ALICE_BSM_A1|a,1|00\n"), ParseError);
  EXPECT_THROW(parse_transcript(head + "x|Alice|ALICE_BSM_A1|a,1|00\n"), ParseError);
  EXPECT_THROW(parse_transcript(head + "1|Alice|ALICE_BSM_A1|a1|00\n"), ParseError);
  EXPECT_THROW(parse_transcript(head + "2|Alice|ALICE_BSM_A1|a,1|00\n1|Bob|BOB_BSM_23|2,3|00\n"), ParseError);
}

}  // namespace
}  // namespace clusterqis
