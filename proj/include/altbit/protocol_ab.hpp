// SPDX-License-Identifier: Apache-2.0
//
// Lockstep model of the alternating-bit protocol. The transition semantics
// follow the executable reference models: the acceptance rule is asymmetric
// (A accepts on equal bits, B on differing bits), a clean but rejected message
// still overwrites the receiver's ALTR, a transmission error changes nothing
// except that the current file is resent, and once both schedules are fully
// delivered further events stutter.
#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "altbit/protocol_base.hpp"

namespace altbit::ab {

struct PendingMsg {
  Terminal receiver = Terminal::A;
  std::string payload;
  bool alt = false;

  bool operator==(const PendingMsg&) const = default;
};

struct Config {
  Terminal starter = Terminal::B;
  bool altt0_a = true;
  bool altt0_b = true;
  bool dummy_first = false;
  Schedules schedules = default_schedules();
};

struct State {
  std::array<bool, 2> altt{};          // alternation bit to transmit
  std::array<bool, 2> altr{};          // last received bit
  std::array<int, 2> file_number{};    // 1-based index of the current outbound file; 0 = none fetched
  std::array<std::vector<std::string>, 2> stored;  // payloads accepted so far
  PendingMsg pending;
  int counter = 1;                     // round counter
  Phase phase = Phase::RecvA;
  Terminal starter = Terminal::B;
  std::shared_ptr<const Schedules> schedules;  // effective schedules, dummy included

  const std::vector<std::string>& schedule_of(Terminal sender) const { return schedules->from(sender); }

  // Current outbound payload; clamps to the last file once the schedule is
  // exhausted and reads as garbage before the first fetch.
  std::string msgt(Terminal t) const;

  // Both terminals hold everything the counterparty had to send.
  bool complete() const;

  friend bool operator==(const State& lhs, const State& rhs) {
    return lhs.altt == rhs.altt && lhs.altr == rhs.altr && lhs.file_number == rhs.file_number &&
           lhs.stored == rhs.stored && lhs.pending == rhs.pending && lhs.counter == rhs.counter &&
           lhs.phase == rhs.phase && lhs.starter == rhs.starter &&
           same_schedules(lhs.schedules, rhs.schedules);
  }
};

struct ReceiveEvent {
  Terminal receiver = Terminal::A;
  PendingMsg delivered;  // pending message at the start of the event
  bool error = false;
  Outcome outcome = Outcome::Stutter;
};

State init(const Config& config);

// The acceptance test alone, without the error conjunct.
bool alternation_test(Terminal receiver, bool msg_bit, const State& st);

// Full acceptance rule: an error always forces rejection.
bool accepts(Terminal receiver, bool msg_bit, const State& st, bool error);

// Test hook used by the checker's mutation tests to run the explorer against
// deliberately broken acceptance semantics.
using AcceptFn = std::function<bool(Terminal receiver, bool msg_bit, const State& st)>;

// Executes the receive phase the state is resting on and advances past the
// following send to the next receive phase; the round counter increments after
// the round's second receive. Throws PhaseError outside a receive phase.
ReceiveEvent step_receive(State& st, bool error, const AcceptFn* accept_override = nullptr);

struct RoundResult {
  std::array<ReceiveEvent, 2> events;
  std::array<std::string, 2> lines;
};

// One full round from its entry phase: both receive events plus the two
// legacy output lines.
RoundResult round(State& st, bool err_a, bool err_b);

// Legacy renderer. The state passed in is the mid-step view the reference
// output prints: ALTR already overwritten on clean paths, ALTT not yet
// flipped. The error field deliberately shows the round's A-side error no
// matter which terminal receives; that quirk is part of the reference output.
std::string format_output_line(const State& at_print, Terminal receiver, int counter,
                               bool err_a_value);

// Builds the mid-step print view from the pre-event state and the event.
std::string legacy_line(const State& pre, const ReceiveEvent& event, bool err_a_value);

// (files stored at A, files stored at B).
std::pair<int, int> count_delivered(const State& st);

}  // namespace altbit::ab
