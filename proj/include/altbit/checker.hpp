// SPDX-License-Identifier: Apache-2.0
//
// Bounded exhaustive exploration over error choices, invariant evaluation,
// trace-invariant search, and initial-condition sweeps for both protocols.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "altbit/faults.hpp"
#include "altbit/protocol_ab.hpp"
#include "altbit/protocol_lynch.hpp"

namespace altbit::check {

struct StepRecord {
  int event = 0;  // 1-based
  Phase phase = Phase::RecvA;
  ab::ReceiveEvent receive;
  ab::State post;
};

struct RunTrace {
  ab::State initial;
  std::vector<StepRecord> steps;
  std::vector<std::string> output;  // legacy lines, one per receive event
};

// Drives one lockstep run over an interleaved error trace, recording full
// per-step snapshots plus the legacy output lines.
RunTrace run_trace(const ab::Config& config, const faults::InterleavedTrace& errors);

struct LynchStepRecord {
  int event = 0;
  Phase phase = Phase::RecvA;
  lynch::ReceiveEvent receive;
  lynch::State post;
};

struct LynchRunTrace {
  lynch::State initial;
  std::vector<LynchStepRecord> steps;
  std::vector<std::string> output;
};

LynchRunTrace run_trace(const lynch::Config& config, const faults::InterleavedTrace& errors);

// True iff each terminal's stored list equals the first k entries of what the
// counterparty is scheduled to send.
bool consistent_prefix(const ab::State& st);

struct Counterexample {
  faults::InterleavedTrace trace;
  int failing_event = 0;
  ab::State state;
};

struct Verdict {
  bool holds = true;
  std::uint64_t explored = 0;
  std::optional<Counterexample> counterexample;
};

// Invariant evaluated after every event; `event` is the 1-based index within
// the current run.
using StatePredicate = std::function<bool(const ab::State& st, int event)>;

struct ExploreOptions {
  ab::Config config;
  int workers = 1;
  const ab::AcceptFn* accept_override = nullptr;
};

// Runs every error sequence of length n_events (at most 30), evaluating the
// invariant after each event. Returns the counterexample that comes first in
// enumeration order, or holds with explored = 2^n_events. Deterministic
// regardless of worker count.
Verdict explore(int n_events, const StatePredicate& invariant, const ExploreOptions& options = {});

// First trace (in enumeration order) whose run completes both schedules
// exactly at event n_events and not earlier.
std::optional<faults::InterleavedTrace> search_completion(int n_events,
                                                          const ab::Config& config = {},
                                                          int workers = 1);

// 1-based event at which the run over `errors` first completes, if it does.
std::optional<int> completion_event(const ab::Config& config, const faults::InterleavedTrace& errors);

struct IcResult {
  std::vector<int> ic;
  bool valid = false;
  std::string witness;  // first divergence, empty when valid
};

// The two closed-form conditions a Lynch initial condition must satisfy:
// ALT_A(0) != ALTT_B(0) and ALTT_A(0) = ALT_B(0).
bool ic_valid_lynch(const lynch::Ic& ic);

// Simulates all 16 initial conditions error-free for three rounds; a row is
// valid iff the first two files in each direction arrive in order. Every
// verdict is cross-checked against ic_valid_lynch; disagreement raises
// OracleMismatchError.
std::vector<IcResult> sweep_lynch();

// Same check over the four (ALTT_A, ALTT_B) combinations.
std::vector<IcResult> sweep_ab(Terminal starter, bool dummy_first = false);

}  // namespace altbit::check
