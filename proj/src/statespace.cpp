// SPDX-License-Identifier: Apache-2.0
#include "altbit/statespace.hpp"

#include <sstream>

namespace altbit::fsm {

TerminalLabel label_event(EventKind kind) {
  switch (kind) {
    case EventKind::Accepted:
    case EventKind::Send:
      return TerminalLabel::Active;
    case EventKind::Rejected:
      return TerminalLabel::AlreadyStored;
    case EventKind::Error:
      return TerminalLabel::Error;
    case EventKind::Idle:
      return TerminalLabel::Idle;
  }
  return TerminalLabel::Idle;
}

TerminalLabel label_outcome(Outcome outcome) {
  switch (outcome) {
    case Outcome::Accepted:
      return label_event(EventKind::Accepted);
    case Outcome::Rejected:
      return label_event(EventKind::Rejected);
    case Outcome::Error:
      return label_event(EventKind::Error);
    case Outcome::Stutter:
      break;
  }
  throw InvalidConfigError("stutter events carry no automaton label");
}

int sys_index(TerminalLabel a, TerminalLabel b) {
  return (static_cast<int>(a) - 1) * 4 + static_cast<int>(b);
}

namespace {

SysState initial_position(Terminal starter) {
  SysState position;
  position.a = starter == Terminal::A ? TerminalLabel::Active : TerminalLabel::Idle;
  position.b = starter == Terminal::B ? TerminalLabel::Active : TerminalLabel::Idle;
  return position;
}

SysState event_position(Terminal receiver, Outcome outcome) {
  SysState position;
  TerminalLabel label = label_outcome(outcome);
  position.a = receiver == Terminal::A ? label : TerminalLabel::Idle;
  position.b = receiver == Terminal::B ? label : TerminalLabel::Idle;
  return position;
}

}  // namespace

std::vector<SysState> system_trace(const check::RunTrace& run) {
  std::vector<SysState> positions;
  positions.reserve(run.steps.size() + 1);
  positions.push_back(initial_position(run.initial.starter));
  for (const auto& step : run.steps) {
    if (step.receive.outcome == Outcome::Stutter) continue;
    positions.push_back(event_position(step.receive.receiver, step.receive.outcome));
  }
  return positions;
}

std::vector<int> system_indices(const check::RunTrace& run) {
  std::vector<int> indices;
  for (const SysState& position : system_trace(run)) indices.push_back(position.index());
  return indices;
}

std::set<std::pair<int, int>> FsmGraph::edge_set() const {
  std::set<std::pair<int, int>> out;
  for (const auto& [edge, count] : edges) out.insert(edge);
  return out;
}

FsmGraph extract_fsm(const std::vector<check::RunTrace>& runs) {
  FsmGraph graph;
  for (const auto& run : runs) {
    std::vector<int> indices = system_indices(run);
    for (std::size_t i = 0; i < indices.size(); ++i) {
      graph.nodes.insert(indices[i]);
      if (i + 1 < indices.size()) graph.edges[{indices[i], indices[i + 1]}] += 1;
    }
  }
  return graph;
}

std::set<int> reachable(int n_max, const ab::Config& config) {
  if (n_max < 0 || n_max > kMaxReachableEvents) {
    throw BoundExceededError("reachable-set bound must lie in [0, " +
                             std::to_string(kMaxReachableEvents) + "], got " +
                             std::to_string(n_max));
  }
  const ab::State init_state = ab::init(config);
  std::set<int> seen;
  seen.insert(initial_position(init_state.starter).index());
  ab::State st;
  for (int length = 1; length <= n_max; ++length) {
    const std::uint64_t total = std::uint64_t{1} << length;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      st = init_state;
      for (int k = 1; k <= length; ++k) {
        ab::ReceiveEvent event = ab::step_receive(st, ((idx >> (k - 1)) & 1) != 0);
        if (event.outcome == Outcome::Stutter) continue;
        seen.insert(event_position(event.receiver, event.outcome).index());
      }
    }
  }
  return seen;
}

Motif motif(const faults::InterleavedTrace& error_seq, const ab::Config& config) {
  check::RunTrace run = check::run_trace(config, error_seq);

  Motif result;
  result.error_seq = error_seq;
  std::vector<SysState> positions = system_trace(run);
  result.a_trace.reserve(positions.size());
  result.b_trace.reserve(positions.size());
  for (const SysState& position : positions) {
    result.a_trace.push_back(position.a);
    result.b_trace.push_back(position.b);
  }
  result.graph = extract_fsm({run});
  return result;
}

SuperposeResult superpose_check(const faults::InterleavedTrace& si,
                                const faults::InterleavedTrace& sj, const ab::Config& config) {
  if (si.size() != sj.size()) {
    throw LengthMismatchError("superposed error sequences must have equal lengths");
  }
  SuperposeResult result;
  result.xor_trace.bits.reserve(si.size());
  for (std::size_t i = 0; i < si.bits.size(); ++i) {
    result.xor_trace.bits.push_back(si.bits[i] != sj.bits[i]);
  }

  std::set<std::pair<int, int>> union_edges = motif(si, config).graph.edge_set();
  for (const auto& edge : motif(sj, config).graph.edge_set()) union_edges.insert(edge);

  result.xor_edges = motif(result.xor_trace, config).graph.edge_set();
  result.union_edges = std::move(union_edges);
  result.additive = result.xor_edges == result.union_edges;
  return result;
}

std::string to_dot(const FsmGraph& graph) {
  std::ostringstream out;
  out << "digraph fsm {\n";
  if (!graph.nodes.empty()) {
    out << "  node [shape=circle, style=filled, fillcolor=white];\n";
    for (int node : graph.nodes) {
      out << "  " << node;
      if (node == 2 || node == 5) {
        out << " [fillcolor=red]";
      } else if (node == 3 || node == 9) {
        out << " [fillcolor=green]";
      }
      out << ";\n";
    }
    for (const auto& [edge, count] : graph.edges) {
      out << "  " << edge.first << " -> " << edge.second << " [label=\"" << count << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace altbit::fsm
