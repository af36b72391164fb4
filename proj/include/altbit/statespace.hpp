// SPDX-License-Identifier: Apache-2.0
//
// Per-terminal automaton labeling, the 16-cell system state space,
// reachable-set computation, FSM extraction with DOT export, error-sequence
// motifs, and the superposition (edge-union homomorphism) test.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "altbit/checker.hpp"

namespace altbit::fsm {

// 1 = idle/waiting, 2 = error, 3 = clean receipt of an already-stored file,
// 4 = accepting/sending.
enum class TerminalLabel : int { Idle = 1, Error = 2, AlreadyStored = 3, Active = 4 };

enum class EventKind { Accepted, Rejected, Error, Send, Idle };

TerminalLabel label_event(EventKind kind);
TerminalLabel label_outcome(Outcome outcome);  // Stutter has no label; throws

// Bijection {1..4}^2 -> {1..16}.
int sys_index(TerminalLabel a, TerminalLabel b);

struct SysState {
  TerminalLabel a = TerminalLabel::Idle;
  TerminalLabel b = TerminalLabel::Idle;

  int index() const { return sys_index(a, b); }
  bool operator==(const SysState&) const = default;
};

// One system state per global position; position 1 is the starter's initial
// send. Post-completion stutter events add no position.
std::vector<SysState> system_trace(const check::RunTrace& run);

std::vector<int> system_indices(const check::RunTrace& run);

struct FsmGraph {
  std::set<int> nodes;
  std::map<std::pair<int, int>, std::uint64_t> edges;  // directed, with visit counts

  std::set<std::pair<int, int>> edge_set() const;
  bool operator==(const FsmGraph&) const = default;
};

FsmGraph extract_fsm(const std::vector<check::RunTrace>& runs);

inline constexpr int kMaxReachableEvents = 14;

// Union of system states over every error sequence of each length 1..n_max.
std::set<int> reachable(int n_max, const ab::Config& config = {});

struct Motif {
  faults::InterleavedTrace error_seq;
  std::vector<TerminalLabel> a_trace;
  std::vector<TerminalLabel> b_trace;
  FsmGraph graph;
};

Motif motif(const faults::InterleavedTrace& error_seq, const ab::Config& config = {});

struct SuperposeResult {
  bool additive = false;
  faults::InterleavedTrace xor_trace;
  std::set<std::pair<int, int>> xor_edges;    // edges of the XOR-trace motif
  std::set<std::pair<int, int>> union_edges;  // union of the two motifs' edges
};

// Adds the sequences bitwise (XOR) and reports whether the resulting motif's
// edge set equals the union of the two input motifs' edge sets.
SuperposeResult superpose_check(const faults::InterleavedTrace& si,
                                const faults::InterleavedTrace& sj,
                                const ab::Config& config = {});

// Deterministic DOT rendering; error states (2, 5) red, already-stored states
// (3, 9) green, edge labels carry visit counts.
std::string to_dot(const FsmGraph& graph);

}  // namespace altbit::fsm
