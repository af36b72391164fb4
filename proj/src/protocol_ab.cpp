// SPDX-License-Identifier: Apache-2.0
#include "altbit/protocol_ab.hpp"

#include <algorithm>

namespace altbit::ab {

std::string State::msgt(Terminal t) const {
  const auto& sched = schedule_of(t);
  int fn = file_number[index(t)];
  if (fn <= 0 || sched.empty()) return kGarbagePayload;
  std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(fn), sched.size());
  return sched[i - 1];
}

bool State::complete() const {
  return stored[index(Terminal::A)].size() >= schedule_of(Terminal::B).size() &&
         stored[index(Terminal::B)].size() >= schedule_of(Terminal::A).size();
}

State init(const Config& config) {
  if (config.schedules.from_a.empty() || config.schedules.from_b.empty()) {
    throw InvalidConfigError("both message schedules must be nonempty");
  }
  Schedules effective = config.schedules;
  if (config.dummy_first) {
    auto& first = config.starter == Terminal::A ? effective.from_a : effective.from_b;
    first.insert(first.begin(), kDummyPayload);
  }

  State st;
  st.schedules = std::make_shared<const Schedules>(std::move(effective));
  st.starter = config.starter;
  st.altt = {config.altt0_a, config.altt0_b};
  st.altr = {false, false};
  st.file_number[index(config.starter)] = 1;
  st.file_number[index(other(config.starter))] = 0;
  st.counter = 1;
  st.phase = config.starter == Terminal::B ? Phase::RecvA : Phase::RecvB;
  st.pending = PendingMsg{other(config.starter), st.msgt(config.starter),
                          st.altt[index(config.starter)]};
  return st;
}

bool alternation_test(Terminal receiver, bool msg_bit, const State& st) {
  // Terminal A accepts on a matching bit, terminal B on a differing one.
  if (receiver == Terminal::A) return msg_bit == st.altt[index(Terminal::A)];
  return msg_bit != st.altt[index(Terminal::B)];
}

bool accepts(Terminal receiver, bool msg_bit, const State& st, bool error) {
  return !error && alternation_test(receiver, msg_bit, st);
}

namespace {

void advance_phase(State& st, Terminal receiver) {
  st.phase = next(next(st.phase));  // skip through the intervening send phase
  if (receiver == st.starter) st.counter += 1;
}

}  // namespace

ReceiveEvent step_receive(State& st, bool error, const AcceptFn* accept_override) {
  Terminal receiver = receiver_of(st.phase);

  ReceiveEvent event;
  event.receiver = receiver;
  event.delivered = st.pending;
  event.error = error;

  if (st.complete()) {
    event.outcome = Outcome::Stutter;
    advance_phase(st, receiver);
    return event;
  }

  if (st.pending.receiver != receiver) {
    throw PhaseError("pending message addressed to terminal " +
                     std::string(1, letter(st.pending.receiver)) + " during " +
                     to_string(st.phase));
  }

  bool passes = accept_override ? (*accept_override)(receiver, st.pending.alt, st)
                                : alternation_test(receiver, st.pending.alt, st);
  bool accepted = !error && passes;

  int r = index(receiver);
  if (!error) {
    st.altr[r] = st.pending.alt;  // the bit is received before it is processed
  }
  if (accepted) {
    st.stored[r].push_back(st.pending.payload);
    st.altt[r] = !st.altt[r];
    st.file_number[r] += 1;
  }
  st.pending = PendingMsg{other(receiver), st.msgt(receiver), st.altt[r]};

  event.outcome = error ? Outcome::Error : (accepted ? Outcome::Accepted : Outcome::Rejected);
  advance_phase(st, receiver);
  return event;
}

RoundResult round(State& st, bool err_a, bool err_b) {
  Phase entry = st.starter == Terminal::B ? Phase::RecvA : Phase::RecvB;
  if (st.phase != entry) {
    throw PhaseError("round must start in phase " + to_string(entry) + ", state is in " +
                     to_string(st.phase));
  }

  RoundResult result;
  bool first_err = st.starter == Terminal::B ? err_a : err_b;
  bool second_err = st.starter == Terminal::B ? err_b : err_a;

  State pre = st;
  result.events[0] = step_receive(st, first_err);
  result.lines[0] = legacy_line(pre, result.events[0], err_a);

  pre = st;
  result.events[1] = step_receive(st, second_err);
  result.lines[1] = legacy_line(pre, result.events[1], err_a);
  return result;
}

std::string format_output_line(const State& at_print, Terminal receiver, int counter,
                               bool err_a_value) {
  Terminal sender = other(receiver);
  int line_no = 2 * counter - 1 + (receiver == at_print.starter ? 1 : 0);

  std::string line = std::to_string(line_no);
  line += " Terminal ";
  line += letter(sender);
  line += " is sending ";
  line += file_label(sender, at_print.file_number[index(sender)]);
  line += ", error(" + std::to_string(counter) + ") = ";
  line += err_a_value ? "true" : "false";
  line += ", ALTR(";
  line += letter(receiver);
  line += ") = ";
  line += at_print.altr[index(receiver)] ? "true" : "false";
  line += ", ALTT(";
  line += letter(receiver);
  line += ") = ";
  line += at_print.altt[index(receiver)] ? "true" : "false";
  return line;
}

std::string legacy_line(const State& pre, const ReceiveEvent& event, bool err_a_value) {
  State at_print = pre;
  if (!event.error && event.outcome != Outcome::Stutter) {
    at_print.altr[index(event.receiver)] = event.delivered.alt;
  }
  return format_output_line(at_print, event.receiver, pre.counter, err_a_value);
}

std::pair<int, int> count_delivered(const State& st) {
  return {static_cast<int>(st.stored[index(Terminal::A)].size()),
          static_cast<int>(st.stored[index(Terminal::B)].size())};
}

}  // namespace altbit::ab
