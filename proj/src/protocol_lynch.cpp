// SPDX-License-Identifier: Apache-2.0
#include "altbit/protocol_lynch.hpp"

#include <algorithm>

namespace altbit::lynch {

Ic ic_from_row(int row) {
  if (row < 1 || row > 16) throw InvalidConfigError("initial-condition row must lie in 1..16");
  int bits = row - 1;
  return Ic{(bits >> 3) & 1, (bits >> 2) & 1, (bits >> 1) & 1, bits & 1};
}

int ic_row(const Ic& ic) {
  return 1 + (ic.alt_a << 3) + (ic.altt_a << 2) + (ic.alt_b << 1) + ic.altt_b;
}

std::string State::msgt(Terminal t) const {
  const auto& sched = schedule_of(t);
  int fn = file_number[index(t)];
  if (fn <= 0 || sched.empty()) return kGarbagePayload;
  std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(fn), sched.size());
  return sched[i - 1];
}

State init(const Config& config) {
  if (config.schedules.from_a.empty() || config.schedules.from_b.empty()) {
    throw InvalidConfigError("both message schedules must be nonempty");
  }
  const Ic& ic = config.ic;
  for (int bit : {ic.alt_a, ic.altt_a, ic.alt_b, ic.altt_b}) {
    if (bit != 0 && bit != 1) throw InvalidConfigError("initial-condition entries must be bits");
  }

  State st;
  st.schedules = std::make_shared<const Schedules>(config.schedules);
  st.starter = config.starter;
  st.alt = {ic.alt_a != 0, ic.alt_b != 0};
  st.altt = {ic.altt_a != 0, ic.altt_b != 0};
  st.altr = {false, false};
  st.vfyr = {false, false};
  st.vfyt = {false, false};
  st.vfyt[index(config.starter)] = true;  // pretend the previous transfer succeeded
  st.file_number[index(config.starter)] = 1;
  st.file_number[index(other(config.starter))] = 0;
  st.counter = 1;
  st.phase = config.starter == Terminal::B ? Phase::RecvA : Phase::RecvB;
  st.pending = PendingMsg{other(config.starter), st.msgt(config.starter),
                          st.altt[index(config.starter)], st.vfyt[index(config.starter)]};
  return st;
}

namespace {

void advance_phase(State& st, Terminal receiver) {
  st.phase = next(next(st.phase));
  if (receiver == st.starter) st.counter += 1;
}

}  // namespace

ReceiveEvent step_receive(State& st, bool error) {
  Terminal receiver = receiver_of(st.phase);

  ReceiveEvent event;
  event.receiver = receiver;
  event.delivered = st.pending;
  event.error = error;

  if (st.pending.receiver != receiver) {
    throw PhaseError("pending message addressed to terminal " +
                     std::string(1, letter(st.pending.receiver)) + " during " +
                     to_string(st.phase));
  }

  int r = index(receiver);
  if (error) {
    // Nothing is read from a corrupted message; flag the failure and resend.
    st.vfyt[r] = false;
    event.outcome = Outcome::Error;
  } else {
    st.altr[r] = st.pending.alt;
    st.vfyr[r] = st.pending.vfy;
    st.vfyt[r] = true;

    bool accepted = st.altr[r] != st.alt[r];
    if (accepted) {
      st.stored[r].push_back(st.pending.payload);
      st.alt[r] = st.altr[r];
    }
    // The opposite data flow is independent of the acceptance above.
    if (st.vfyr[r]) {
      st.file_number[r] += 1;
      st.altt[r] = !st.altt[r];
    }
    event.outcome = accepted ? Outcome::Accepted : Outcome::Rejected;
  }
  st.pending = PendingMsg{other(receiver), st.msgt(receiver), st.altt[r], st.vfyt[r]};

  advance_phase(st, receiver);
  return event;
}

State run(const Config& config, const faults::PerRoundTraces& traces, int rounds) {
  if (rounds < 1) throw InvalidConfigError("rounds must be at least 1");
  State st = init(config);
  for (int round = 1; round <= rounds; ++round) {
    bool first = st.starter == Terminal::B ? traces.at_a(round) : traces.at_b(round);
    bool second = st.starter == Terminal::B ? traces.at_b(round) : traces.at_a(round);
    step_receive(st, first);
    step_receive(st, second);
  }
  return st;
}

std::pair<int, int> count_delivered(const State& st) {
  return {static_cast<int>(st.stored[index(Terminal::A)].size()),
          static_cast<int>(st.stored[index(Terminal::B)].size())};
}

}  // namespace altbit::lynch
