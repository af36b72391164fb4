// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <set>

#include "altbit/statespace.hpp"
#include "support/oracle_data.hpp"

using namespace altbit;

namespace {

std::vector<int> as_ints(const std::vector<fsm::TerminalLabel>& labels) {
  std::vector<int> out;
  for (fsm::TerminalLabel label : labels) out.push_back(static_cast<int>(label));
  return out;
}

check::RunTrace canonical_run() {
  return check::run_trace(ab::Config{}, faults::to_interleaved(faults::canonical()));
}

}  // namespace

TEST_CASE("event outcomes map onto the four terminal labels") {
  CHECK(fsm::label_event(fsm::EventKind::Error) == fsm::TerminalLabel::Error);
  CHECK(fsm::label_event(fsm::EventKind::Rejected) == fsm::TerminalLabel::AlreadyStored);
  CHECK(fsm::label_event(fsm::EventKind::Accepted) == fsm::TerminalLabel::Active);
  CHECK(fsm::label_event(fsm::EventKind::Send) == fsm::TerminalLabel::Active);
  CHECK(fsm::label_event(fsm::EventKind::Idle) == fsm::TerminalLabel::Idle);
}

TEST_CASE("system indexing is the documented bijection") {
  CHECK(fsm::sys_index(fsm::TerminalLabel::Idle, fsm::TerminalLabel::Idle) == 1);
  CHECK(fsm::sys_index(fsm::TerminalLabel::Active, fsm::TerminalLabel::Idle) == 13);
  CHECK(fsm::sys_index(fsm::TerminalLabel::Idle, fsm::TerminalLabel::Active) == 4);

  std::set<int> all;
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      all.insert(fsm::sys_index(static_cast<fsm::TerminalLabel>(a),
                                static_cast<fsm::TerminalLabel>(b)));
    }
  }
  CHECK(all.size() == 16);
  CHECK(*all.begin() == 1);
  CHECK(*all.rbegin() == 16);
}

TEST_CASE("the canonical run walks the published system trace") {
  CHECK(fsm::system_indices(canonical_run()) == testdata::kCanonicalSystemTrace);
}

TEST_CASE("an error-free run alternates between the two accepting states") {
  check::RunTrace run = check::run_trace(ab::Config{}, faults::to_interleaved(faults::all_false(4)));
  CHECK(fsm::system_indices(run) == std::vector<int>{4, 13, 4, 13, 4, 13, 4, 13, 4});
}

TEST_CASE("motifs reproduce the published label traces") {
  for (const auto& row : testdata::kMotifRows) {
    CAPTURE(row.error_bits);
    fsm::Motif motif = fsm::motif(faults::parse_bits(row.error_bits));
    CHECK(as_ints(motif.a_trace) == row.a_trace);
    CHECK(as_ints(motif.b_trace) == row.b_trace);
  }
}

TEST_CASE("exactly one terminal is active at every position") {
  // Exhaustive over every error sequence of length up to 10; none of these
  // runs completes, so every event contributes a position.
  for (int length = 0; length <= 10; ++length) {
    const std::uint64_t total = std::uint64_t{1} << length;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      fsm::Motif motif = fsm::motif(faults::trace_from_index(length, idx));
      REQUIRE(motif.a_trace.size() == static_cast<std::size_t>(length) + 1);
      REQUIRE(motif.b_trace.size() == motif.a_trace.size());
      for (std::size_t i = 0; i < motif.a_trace.size(); ++i) {
        bool a_idle = motif.a_trace[i] == fsm::TerminalLabel::Idle;
        bool b_idle = motif.b_trace[i] == fsm::TerminalLabel::Idle;
        CHECK(a_idle != b_idle);
        CHECK(fsm::sys_index(motif.a_trace[i], motif.b_trace[i]) != 1);
      }
    }
  }
}

TEST_CASE("reachable states grow monotonically and saturate") {
  // Both one-event runs by hand: a clean first receive gives 13, an error
  // gives 5, and the initial send contributes 4.
  CHECK(fsm::reachable(1) == std::set<int>{4, 5, 13});

  std::set<int> previous;
  for (int n = 0; n <= 6; ++n) {
    std::set<int> current = fsm::reachable(n);
    CHECK(std::includes(current.begin(), current.end(), previous.begin(), previous.end()));
    previous = current;
  }
  CHECK(fsm::reachable(6) == std::set<int>{2, 3, 4, 5, 9, 13});
  CHECK_THROWS_AS(fsm::reachable(15), BoundExceededError);
}

TEST_CASE("fsm extraction collects nodes and counted edges") {
  SUBCASE("empty run list") {
    fsm::FsmGraph graph = fsm::extract_fsm({});
    CHECK(graph.nodes.empty());
    CHECK(graph.edges.empty());
  }
  SUBCASE("single error-free run") {
    check::RunTrace run = check::run_trace(ab::Config{}, faults::to_interleaved(faults::all_false(3)));
    fsm::FsmGraph graph = fsm::extract_fsm({run});
    CHECK(graph.nodes == std::set<int>{4, 13});
    CHECK(graph.edge_set() == std::set<std::pair<int, int>>{{4, 13}, {13, 4}});
    CHECK(graph.edges.at({4, 13}) == 3);
  }
  SUBCASE("canonical run visits five states, never state 3") {
    fsm::FsmGraph graph = fsm::extract_fsm({canonical_run()});
    CHECK(graph.nodes == std::set<int>{2, 4, 5, 9, 13});
    CHECK(graph.nodes.count(3) == 0);
  }
}

TEST_CASE("superposing the two single-error sequences is not additive") {
  faults::InterleavedTrace s2 = faults::parse_bits("00E00000");
  faults::InterleavedTrace s3 = faults::parse_bits("000E0000");
  fsm::SuperposeResult result = fsm::superpose_check(s2, s3);
  CHECK_FALSE(result.additive);
  CHECK(result.xor_trace == faults::parse_bits("00EE0000"));
  // The XOR motif turns both terminals into plain error states (5 then 2),
  // while the union keeps the duplicate-rejection detours.
  CHECK(result.xor_edges == std::set<std::pair<int, int>>{{4, 13}, {13, 4}, {4, 5}, {5, 2}, {2, 13}});
  CHECK(result.union_edges.count({5, 3}) == 1);
  CHECK(result.union_edges.count({2, 9}) == 1);
}

TEST_CASE("degenerate superpositions are additive") {
  faults::InterleavedTrace s1 = faults::parse_bits("00000000");
  faults::InterleavedTrace s2 = faults::parse_bits("00E00000");
  CHECK(fsm::superpose_check(s1, s1).additive);
  CHECK(fsm::superpose_check(s2, s1).additive);
  CHECK_THROWS_AS(fsm::superpose_check(s1, faults::parse_bits("00")), LengthMismatchError);
}

TEST_CASE("dot rendering is deterministic and follows the color legend") {
  SUBCASE("empty graph") { CHECK(fsm::to_dot(fsm::FsmGraph{}) == "digraph fsm {\n}\n"); }
  SUBCASE("two-node cycle") {
    check::RunTrace run = check::run_trace(ab::Config{}, faults::to_interleaved(faults::all_false(2)));
    std::string dot = fsm::to_dot(fsm::extract_fsm({run}));
    CHECK(dot.find("4 -> 13") != std::string::npos);
    CHECK(dot.find("13 -> 4") != std::string::npos);
  }
  SUBCASE("canonical graph colors the error and duplicate states") {
    std::string dot = fsm::to_dot(fsm::extract_fsm({canonical_run()}));
    CHECK(dot.find("2 [fillcolor=red]") != std::string::npos);
    CHECK(dot.find("5 [fillcolor=red]") != std::string::npos);
    CHECK(dot.find("9 [fillcolor=green]") != std::string::npos);
  }
}
