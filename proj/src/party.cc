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

#include "clusterqis/party.h"

#include <array>
#include <charconv>
#include <cstdio>
#include <span>

#include "clusterqis/errors.h"

namespace clusterqis {

namespace {

constexpr std::array<PartyId, 3> kLegitimateParties = {PartyId::kAlice, PartyId::kBob,
                                                       PartyId::kChika};

constexpr std::array<Stage, 2> kTeleportStages = {Stage::kAliceBsmA1, Stage::kBobBsm23};
constexpr std::array<Stage, 3> kQisStages = {Stage::kAliceBsmA1, Stage::kAliceBsmB6,
                                             Stage::kBobBsm23};

std::span<const Stage> stage_order(Protocol p) {
  if (p == Protocol::kTeleport) return kTeleportStages;
  return kQisStages;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::uint64_t parse_u64(std::string_view s, std::size_t line, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(line, "bad parameter '" + std::string(s) + "'");
  }
  return v;
}

std::string_view strip_key(std::string_view field, std::string_view key, std::size_t line) {
  if (field.substr(0, key.size()) != key) {
    throw ParseError(line, "expected '" + std::string(key) + "'");
  }
  return field.substr(key.size());
}

void check_message_shape(const ClassicalMessage& msg) {
  if (msg.sender == PartyId::kEve) throw ProtocolError("Eve cannot send on the classical channel");
  if (stage_sender(msg.stage) != msg.sender) {
    throw ProtocolError(std::string(stage_name(msg.stage)) + " must be sent by " +
                        std::string(party_name(stage_sender(msg.stage))));
  }
}

}  // namespace

std::string_view stage_name(Stage s) {
  switch (s) {
    case Stage::kAliceBsmA1: return "ALICE_BSM_A1";
    case Stage::kAliceBsmB6: return "ALICE_BSM_B6";
    case Stage::kBobBsm23: return "BOB_BSM_23";
  }
  return "?";
}

Stage stage_from_name(std::string_view name) {
  for (Stage s : kQisStages) {
    if (stage_name(s) == name) return s;
  }
  throw ConfigError("unknown stage '" + std::string(name) + "'");
}

PartyId stage_sender(Stage s) { return s == Stage::kBobBsm23 ? PartyId::kBob : PartyId::kAlice; }

std::string_view protocol_name(Protocol p) { return p == Protocol::kTeleport ? "teleport" : "qis"; }

Protocol protocol_from_name(std::string_view name) {
  if (name == "teleport") return Protocol::kTeleport;
  if (name == "qis") return Protocol::kQis;
  throw ConfigError("unknown protocol '" + std::string(name) + "'");
}

std::string Transcript::run_id() const { return protocol + "-" + std::to_string(seed); }

std::string serialize_transcript(const Transcript& t) {
  std::string out = "#protocol=" + t.protocol + " seed=" + std::to_string(t.seed) + " params=";
  for (std::size_t i = 0; i < t.params.size(); ++i) {
    if (i > 0) out += ',';
    out += format_double(t.params[i]);
  }
  out += '\n';
  for (const auto& m : t.messages) {
    out += std::to_string(m.seq);
    out += '|';
    out += party_name(m.sender);
    out += '|';
    out += stage_name(m.stage);
    out += '|';
    out += m.pair.first + "," + m.pair.second;
    out += '|';
    out += wire_code(m.outcome);
    out += '\n';
  }
  return out;
}

Transcript parse_transcript(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, "missing header");

  Transcript t;
  {
    const auto fields = split(lines[0], ' ');
    if (fields.size() != 3) throw ParseError(1, "header must have three fields");
    t.protocol = std::string(strip_key(fields[0], "#protocol=", 1));
    if (t.protocol.empty()) throw ParseError(1, "empty protocol name");
    t.seed = parse_u64(strip_key(fields[1], "seed=", 1), 1, "seed");
    const std::string_view csv = strip_key(fields[2], "params=", 1);
    if (!csv.empty()) {
      for (std::string_view p : split(csv, ',')) t.params.push_back(parse_double(p, 1));
    }
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    const auto f = split(lines[i], '|');
    if (f.size() != 5) throw ParseError(line, "expected 5 '|'-separated fields");
    ClassicalMessage m;
    m.seq = parse_u64(f[0], line, "seq");
    const auto pair = split(f[3], ',');
    if (pair.size() != 2 || pair[0].empty() || pair[1].empty()) {
      throw ParseError(line, "bad qubit pair '" + std::string(f[3]) + "'");
    }
    m.pair = {std::string(pair[0]), std::string(pair[1])};
    try {
      m.sender = party_from_name(f[1]);
      m.stage = stage_from_name(f[2]);
      m.outcome = bell_from_wire(f[4]);
      check_message_shape(m);
    } catch (const std::exception& e) {
      throw ParseError(line, e.what());
    }
    if (!t.messages.empty() && m.seq <= t.messages.back().seq) {
      throw ParseError(line, "seq is not strictly increasing");
    }
    t.messages.push_back(std::move(m));
  }
  return t;
}

void StageMachine::advance(Stage s) {
  const auto next = expected();
  if (!next) {
    throw ProtocolError("run already complete; unexpected " + std::string(stage_name(s)));
  }
  if (*next != s) {
    throw ProtocolError("protocol order violated: expected " + std::string(stage_name(*next)) +
                        ", got " + std::string(stage_name(s)));
  }
  const auto order = stage_order(protocol_);
  position_ = (position_ + 1) % order.size();
  if (position_ == 0 && protocol_ == Protocol::kQis) finished_ = true;
}

std::optional<Stage> StageMachine::expected() const {
  if (finished_) return std::nullopt;
  return stage_order(protocol_)[position_];
}

bool InMemoryTransport::deliver(PartyId recipient, const ClassicalMessage& msg) {
  std::lock_guard lock(mu_);
  if (fault_ == Fault::kDropSeq && msg.seq == fault_seq_) return false;
  if (fault_ == Fault::kDelaySeq && msg.seq == fault_seq_) {
    held_[recipient] = msg;
    return true;
  }
  auto& box = inboxes_[recipient];
  box.push_back(msg);
  if (auto it = held_.find(recipient); it != held_.end()) {
    box.push_back(it->second);
    held_.erase(it);
  }
  return true;
}

std::vector<ClassicalMessage> InMemoryTransport::inbox(PartyId recipient) const {
  std::lock_guard lock(mu_);
  auto it = inboxes_.find(recipient);
  if (it == inboxes_.end()) return {};
  return it->second;
}

ClassicalChannel::ClassicalChannel(Protocol protocol, std::uint64_t seed, std::vector<double> params,
                                   Transport& transport)
    : transport_(transport), machine_(protocol) {
  transcript_.protocol = std::string(protocol_name(protocol));
  transcript_.seed = seed;
  transcript_.params = std::move(params);
}

Ack ClassicalChannel::broadcast(const ClassicalMessage& msg) {
  std::unique_lock lock(mu_);
  check_message_shape(msg);
  if (msg.seq <= last_seq_) {
    throw ProtocolError("out-of-order seq " + std::to_string(msg.seq) + " (last " +
                        std::to_string(last_seq_) + ")");
  }
  machine_.advance(msg.stage);

  Ack ack{msg.seq, {}};
  for (PartyId p : kLegitimateParties) {
    if (p == msg.sender) continue;
    const bool ok = transport_.deliver(p, msg);
    const auto box = transport_.inbox(p);
    if (!ok || box.empty() || box.back() != msg) {
      throw ProtocolError("delivery of seq " + std::to_string(msg.seq) + " to " +
                          std::string(party_name(p)) + " failed; run aborted");
    }
    for (std::size_t i = 1; i < box.size(); ++i) {
      if (box[i].seq <= box[i - 1].seq) {
        throw ProtocolError(std::string(party_name(p)) + " received messages out of order; run aborted");
      }
    }
    ack.recipients.push_back(p);
  }
  transcript_.messages.push_back(msg);
  last_seq_ = msg.seq;
  lock.unlock();
  cv_.notify_all();
  return ack;
}

Ack ClassicalChannel::announce(PartyId sender, Stage stage, std::pair<std::string, std::string> pair,
                               BellOutcome outcome) {
  std::uint64_t seq = 0;
  {
    std::lock_guard lock(mu_);
    seq = last_seq_ + 1;
  }
  return broadcast(ClassicalMessage{seq, sender, stage, std::move(pair), outcome});
}

ClassicalMessage ClassicalChannel::wait_for(PartyId party, std::uint64_t after_seq) const {
  std::unique_lock lock(mu_);
  for (;;) {
    for (const auto& m : transport_.inbox(party)) {
      if (m.seq > after_seq) return m;
    }
    cv_.wait(lock);
  }
}

Transcript ClassicalChannel::transcript() const {
  std::lock_guard lock(mu_);
  return transcript_;
}

std::uint64_t ClassicalChannel::last_seq() const {
  std::lock_guard lock(mu_);
  return last_seq_;
}

}  // namespace clusterqis
