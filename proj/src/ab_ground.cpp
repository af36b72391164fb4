// SPDX-License-Identifier: Apache-2.0
#include "altbit/ab_ground.hpp"

#include <utility>

namespace altbit::ground {

using kernel::MachineState;
using kernel::Rule;
using kernel::UpdateSet;
using kernel::Value;

namespace {

Value term_value(Terminal t) { return Value{std::string(1, letter(t))}; }

bool err_at(const std::vector<bool>& trace, std::int64_t round) {
  return round >= 1 && round <= static_cast<std::int64_t>(trace.size()) &&
         trace[static_cast<std::size_t>(round - 1)];
}

}  // namespace

kernel::Location file_number_loc(Terminal t) { return kernel::loc("fileNumber", term_value(t)); }
kernel::Location altt_loc(Terminal t) { return kernel::loc("ALTT", term_value(t)); }
kernel::Location altr_loc(Terminal t) { return kernel::loc("ALTR", term_value(t)); }
kernel::Location counter_loc() { return kernel::loc("counter"); }
kernel::Location initialized_loc() { return kernel::loc("initialized"); }
kernel::Location phase_loc() { return kernel::loc("phase"); }
kernel::Location halted_loc() { return kernel::loc("halted"); }
kernel::Location output_loc() { return kernel::loc("output"); }

Rule initialize_rule() {
  Rule set_bits = kernel::forall_merge(
      {term_value(Terminal::A), term_value(Terminal::B)}, [](const Value& t) -> Rule {
        return [t](const MachineState&) {
          UpdateSet u;
          u.insert(kernel::Location{"ALTT", {t}}, Value{true});
          u.insert(kernel::Location{"ALTR", {t}}, Value{false});
          return u;
        };
      });
  return [set_bits](const MachineState& s) {
    UpdateSet u = set_bits(s);
    u.insert(file_number_loc(Terminal::A), Value{std::int64_t{0}});
    u.insert(file_number_loc(Terminal::B), Value{std::int64_t{1}});
    u.insert(counter_loc(), Value{std::int64_t{1}});
    u.insert(phase_loc(), Value{to_string(Phase::SendB)});
    u.insert(initialized_loc(), Value{true});
    return u;
  };
}

Rule receive_bit_rule(Terminal t) {
  return [t](const MachineState& s) {
    UpdateSet u;
    u.insert(altr_loc(t), Value{s.get_bool(altt_loc(other(t)))});
    return u;
  };
}

std::string derived_output_line(const MachineState& s, Terminal t, bool err_a_value) {
  Terminal sender = other(t);
  std::int64_t counter = s.get_int(counter_loc());
  std::int64_t line_no = 2 * counter - 1 + (t == Terminal::B ? 1 : 0);

  std::string line = std::to_string(line_no);
  line += " Terminal ";
  line += letter(sender);
  line += " is sending ";
  line += file_label(sender, static_cast<int>(s.get_int(file_number_loc(sender))));
  line += ", error(" + std::to_string(counter) + ") = ";
  line += err_a_value ? "true" : "false";
  line += ", ALTR(";
  line += letter(t);
  line += ") = ";
  line += s.get_bool(altr_loc(t)) ? "true" : "false";
  line += ", ALTT(";
  line += letter(t);
  line += ") = ";
  line += s.get_bool(altt_loc(t)) ? "true" : "false";
  return line;
}

namespace {

Rule print_rule(Terminal t, std::vector<bool> err_trace_a) {
  return [t, err_trace_a = std::move(err_trace_a)](const MachineState& s) {
    bool err_a = err_at(err_trace_a, s.get_int(counter_loc()));
    std::vector<std::string> lines = s.get_list(output_loc());
    lines.push_back(derived_output_line(s, t, err_a));
    UpdateSet u;
    u.insert(output_loc(), Value{std::move(lines)});
    return u;
  };
}

Rule accept_test_rule(Terminal t) {
  return [t](const MachineState& s) {
    bool altr = s.get_bool(altr_loc(t));
    bool altt = s.get_bool(altt_loc(t));
    bool condition = t == Terminal::A ? altr == altt : altr != altt;
    UpdateSet u;
    if (condition) {
      u.insert(file_number_loc(t), Value{s.get_int(file_number_loc(t)) + 1});
      u.insert(altt_loc(t), Value{!altt});
    }
    return u;
  };
}

}  // namespace

Rule receive_success_rule(Terminal t, std::vector<bool> err_trace_a) {
  return kernel::seq({receive_bit_rule(t), print_rule(t, std::move(err_trace_a)), accept_test_rule(t)});
}

Rule receive_msg_rule(Terminal t, bool error, std::vector<bool> err_trace_a) {
  if (error) return print_rule(t, std::move(err_trace_a));
  return receive_success_rule(t, std::move(err_trace_a));
}

Rule run_rule(int rounds, faults::PerRoundTraces traces) {
  Rule initialize = initialize_rule();
  return [rounds, traces = std::move(traces), initialize](const MachineState& s) {
    if (!s.get_bool(initialized_loc())) return initialize(s);

    std::int64_t counter = s.get_int(counter_loc());
    Phase phase = phase_from_string(s.get_label(phase_loc()));

    UpdateSet u;
    switch (phase) {
      case Phase::SendB:
        u.insert(phase_loc(), Value{to_string(Phase::RecvA)});
        break;
      case Phase::RecvA:
        u = receive_msg_rule(Terminal::A, err_at(traces.err_a, counter), traces.err_a)(s);
        u.insert(phase_loc(), Value{to_string(Phase::SendA)});
        break;
      case Phase::SendA:
        u.insert(phase_loc(), Value{to_string(Phase::RecvB)});
        break;
      case Phase::RecvB:
        u = receive_msg_rule(Terminal::B, err_at(traces.err_b, counter), traces.err_a)(s);
        u.insert(counter_loc(), Value{counter + 1});
        u.insert(phase_loc(), Value{to_string(Phase::SendB)});
        break;
    }
    if (counter >= rounds + 1) u.insert(halted_loc(), Value{true});
    return u;
  };
}

GroundRun run_ground_model(int rounds, const faults::PerRoundTraces& traces) {
  if (rounds < 0) throw InvalidConfigError("rounds must be nonnegative");
  Rule run = run_rule(rounds, traces);
  MachineState s;
  // One init step, four steps per round, one closing step that halts.
  int max_steps = 4 * rounds + 2;
  for (int i = 0; i < max_steps && !s.get_bool(halted_loc()); ++i) {
    s = kernel::step(s, run);
  }
  GroundRun result;
  result.output = s.get_list(output_loc());
  result.final_state = std::move(s);
  return result;
}

}  // namespace altbit::ground
