// SPDX-License-Identifier: Apache-2.0
//
// The alternating-bit ground model written as kernel rules over a generic
// machine state: one phase per step, parallel update sets, sequential
// composition only inside the receive-success rule. It tracks the control
// bits and file counters (not the stored payload lists) and appends its
// legacy output lines to a dedicated `output` location, so runs can be
// compared against the richer lockstep simulator.
#pragma once

#include <string>
#include <vector>

#include "altbit/faults.hpp"
#include "altbit/kernel.hpp"
#include "altbit/protocol_base.hpp"

namespace altbit::ground {

// Locations: fileNumber(T), ALTT(T), ALTR(T), counter, initialized, phase,
// halted, output.
kernel::Location file_number_loc(Terminal t);
kernel::Location altt_loc(Terminal t);
kernel::Location altr_loc(Terminal t);
kernel::Location counter_loc();
kernel::Location initialized_loc();
kernel::Location phase_loc();
kernel::Location halted_loc();
kernel::Location output_loc();

// fileNumber = (0, 1), ALTT = (true, true), ALTR = (false, false),
// counter = 1, phase = SendB, initialized = true.
kernel::Rule initialize_rule();

// ALTR(t) := ALTT(other(t)).
kernel::Rule receive_bit_rule(Terminal t);

// seq: receive the bit, emit the output line, then run the acceptance test
// and, on success, fetch the next file and flip the control bit.
kernel::Rule receive_success_rule(Terminal t, std::vector<bool> err_trace_a);

// Dispatches on the error flag; the output line is emitted either way.
kernel::Rule receive_msg_rule(Terminal t, bool error, std::vector<bool> err_trace_a);

// The top-level rule: initializes on the first step, then cycles the phase
// machine one phase per step and halts once `rounds` rounds have run.
kernel::Rule run_rule(int rounds, faults::PerRoundTraces traces);

// The derived output line for terminal t in the given state.
std::string derived_output_line(const kernel::MachineState& state, Terminal t, bool err_a_value);

struct GroundRun {
  kernel::MachineState final_state;
  std::vector<std::string> output;
};

GroundRun run_ground_model(int rounds, const faults::PerRoundTraces& traces);

}  // namespace altbit::ground
