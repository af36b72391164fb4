// SPDX-License-Identifier: Apache-2.0
//
// Lockstep model of Lynch's 2-bit half-duplex protocol. Each message carries
// the sender's alternation bit and a verify bit. A clean message is accepted
// iff its alternation bit differs from the receiver's stored bit; the verify
// bit tells the receiver whether its own previous transfer succeeded (load
// the next file) or not (resend). The two data flows are decoupled: a
// rejected duplicate can still trigger loading the next outbound file.
#pragma once

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "altbit/faults.hpp"
#include "altbit/protocol_base.hpp"

namespace altbit::lynch {

// (ALT_A, ALTT_A, ALT_B, ALTT_B) at round zero.
struct Ic {
  int alt_a = 0;
  int altt_a = 0;
  int alt_b = 0;
  int altt_b = 0;

  bool operator==(const Ic&) const = default;
};

// Row 1..16: binary counting over the tuple with ALT_A as the most
// significant bit.
Ic ic_from_row(int row);
int ic_row(const Ic& ic);

struct PendingMsg {
  Terminal receiver = Terminal::A;
  std::string payload;
  bool alt = false;
  bool vfy = false;

  bool operator==(const PendingMsg&) const = default;
};

struct Config {
  Ic ic;
  Terminal starter = Terminal::B;
  Schedules schedules = default_schedules();
};

struct State {
  std::array<bool, 2> alt{};   // stored local alternation bit
  std::array<bool, 2> altt{};  // alternation bit attached to outbound messages
  std::array<bool, 2> altr{};  // alternation bit last received
  std::array<bool, 2> vfyt{};  // verify bit to transmit
  std::array<bool, 2> vfyr{};  // verify bit last received
  std::array<int, 2> file_number{};
  std::array<std::vector<std::string>, 2> stored;
  PendingMsg pending;
  int counter = 1;
  Phase phase = Phase::RecvA;
  Terminal starter = Terminal::B;
  std::shared_ptr<const Schedules> schedules;

  const std::vector<std::string>& schedule_of(Terminal sender) const { return schedules->from(sender); }
  std::string msgt(Terminal t) const;

  friend bool operator==(const State& lhs, const State& rhs) {
    return lhs.alt == rhs.alt && lhs.altt == rhs.altt && lhs.altr == rhs.altr &&
           lhs.vfyt == rhs.vfyt && lhs.vfyr == rhs.vfyr && lhs.file_number == rhs.file_number &&
           lhs.stored == rhs.stored && lhs.pending == rhs.pending && lhs.counter == rhs.counter &&
           lhs.phase == rhs.phase && lhs.starter == rhs.starter &&
           same_schedules(lhs.schedules, rhs.schedules);
  }
};

struct ReceiveEvent {
  Terminal receiver = Terminal::A;
  PendingMsg delivered;
  bool error = false;
  Outcome outcome = Outcome::Error;
};

// The starter behaves as if its previous transfer succeeded (vfyt = 1) and
// has its first file already in flight.
State init(const Config& config);

ReceiveEvent step_receive(State& st, bool error);

State run(const Config& config, const faults::PerRoundTraces& traces, int rounds);

// (files stored at A, files stored at B).
std::pair<int, int> count_delivered(const State& st);

}  // namespace altbit::lynch
