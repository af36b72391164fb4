// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Usage: altbit_acceptance <path-to-cli> [workers]
#include <chrono>
#include <iostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "altbit/ab_ground.hpp"
#include "altbit/checker.hpp"
#include "altbit/statespace.hpp"
#include "support/kernel_properties.hpp"
#include "support/oracle_data.hpp"
#include "support/run_cli.hpp"

using namespace altbit;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name;
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

std::string first_difference(const std::string& got, const std::string& want) {
  std::size_t limit = std::min(got.size(), want.size());
  for (std::size_t i = 0; i < limit; ++i) {
    if (got[i] != want[i]) return "first differing byte at offset " + std::to_string(i);
  }
  return "length " + std::to_string(got.size()) + " vs " + std::to_string(want.size());
}

void criterion_golden_trace(const std::string& cli) {
  testsupport::CliResult run = testsupport::run_cli(
      "simulate --protocol ab --errors canonical --rounds 11 --format coreasm");
  bool ok = run.exit_code == 0 && run.stdout_text == testdata::kGoldenOutput;
  report(1, "golden 22-line trace, byte-identical", ok,
         run.exit_code != 0 ? "exit code " + std::to_string(run.exit_code)
                            : first_difference(run.stdout_text, std::string(testdata::kGoldenOutput)));
  (void)cli;
}

void criterion_delivery_counts() {
  check::RunTrace ab_run =
      check::run_trace(ab::Config{}, faults::to_interleaved(faults::canonical()));
  auto ab_counts = ab::count_delivered(ab_run.steps.back().post);

  lynch::Config lynch_config;
  lynch_config.ic = lynch::ic_from_row(2);
  auto lynch_counts = lynch::count_delivered(lynch::run(lynch_config, faults::canonical(), 11));

  bool ok = ab_counts == std::pair<int, int>{6, 6} && lynch_counts == std::pair<int, int>{6, 4};
  report(2, "delivery counts: ab (6,6), lynch (6,4)", ok,
         "ab (" + std::to_string(ab_counts.first) + "," + std::to_string(ab_counts.second) +
             "), lynch (" + std::to_string(lynch_counts.first) + "," +
             std::to_string(lynch_counts.second) + ")");
}

void criterion_bounded_invariant(int workers) {
  auto start = std::chrono::steady_clock::now();
  check::ExploreOptions options;
  options.workers = workers;
  check::Verdict verdict = check::explore(
      22, [](const ab::State& st, int) { return check::consistent_prefix(st); }, options);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  bool ok = verdict.holds && verdict.explored == 4194304;
  report(3, "consistent-prefix holds over all 2^22 error sequences", ok,
         verdict.holds ? "explored " + std::to_string(verdict.explored)
                       : "violated by " + faults::to_bit_string(verdict.counterexample->trace));
  std::cout << "      (explored " << verdict.explored << " runs with " << workers
            << " worker(s) in " << elapsed << " ms)\n";
}

void criterion_completion_search(int workers) {
  auto found22 = check::search_completion(22, ab::Config{}, workers);
  bool ok = found22.has_value();
  std::string detail;
  if (ok) {
    auto done = check::completion_event(ab::Config{}, *found22);
    ok = done.has_value() && *done == 22;
    if (!ok) detail = "replay did not complete exactly at event 22";
    check::RunTrace replay = check::run_trace(ab::Config{}, *found22);
    const ab::State& final_state = replay.steps.back().post;
    if (ok && !(final_state.altt == std::array<bool, 2>{true, true} && final_state.complete())) {
      ok = false;
      detail = "final snapshot does not match the completed reference state";
    }
  } else {
    detail = "no trace found at horizon 22";
  }

  auto found12 = check::search_completion(12, ab::Config{}, workers);
  if (ok && !(found12.has_value() && found12->bits == std::vector<bool>(12, false))) {
    ok = false;
    detail = "horizon 12 did not return the all-false trace";
  }
  if (ok && check::search_completion(11, ab::Config{}, workers).has_value()) {
    ok = false;
    detail = "horizon 11 unexpectedly found a completing trace";
  }
  report(4, "completion search at horizons 22 / 12 / 11", ok, detail);
}

void criterion_lynch_sweep() {
  try {
    std::vector<check::IcResult> results = check::sweep_lynch();
    std::set<int> valid;
    for (std::size_t row = 0; row < results.size(); ++row) {
      if (results[row].valid) valid.insert(static_cast<int>(row) + 1);
    }
    bool ok = valid == std::set<int>{2, 8, 9, 15};
    std::string got = "valid rows:";
    for (int row : valid) got += " " + std::to_string(row);
    report(5, "Lynch sweep: valid set {2, 8, 9, 15}, pointwise predicate agreement", ok, got);
  } catch (const OracleMismatchError& e) {
    report(5, "Lynch sweep: valid set {2, 8, 9, 15}, pointwise predicate agreement", false,
           e.what());
  }
}

void criterion_ab_sweep() {
  auto valid_set = [](const std::vector<check::IcResult>& results) {
    std::set<std::vector<int>> out;
    for (const auto& result : results) {
      if (result.valid) out.insert(result.ic);
    }
    return out;
  };
  bool ok = valid_set(check::sweep_ab(Terminal::B)) == std::set<std::vector<int>>{{0, 0}, {1, 1}} &&
            valid_set(check::sweep_ab(Terminal::A)) == std::set<std::vector<int>>{{0, 1}, {1, 0}} &&
            valid_set(check::sweep_ab(Terminal::B, true)).size() == 4 &&
            valid_set(check::sweep_ab(Terminal::A, true)).size() == 4;
  report(6, "alternating-bit sweep per starter, all four with a dummy first file", ok);
}

void criterion_state_space() {
  check::RunTrace canonical =
      check::run_trace(ab::Config{}, faults::to_interleaved(faults::canonical()));
  bool trace_ok = fsm::system_indices(canonical) == testdata::kCanonicalSystemTrace;

  fsm::FsmGraph graph = fsm::extract_fsm({canonical});
  bool nodes_ok = graph.nodes == std::set<int>{2, 4, 5, 9, 13} && graph.nodes.count(3) == 0;

  std::set<int> reach = fsm::reachable(10);
  bool reach_ok = reach == std::set<int>{2, 3, 4, 5, 9, 13};

  std::string detail;
  if (!trace_ok) detail = "canonical system trace mismatch";
  if (!nodes_ok) detail += std::string(detail.empty() ? "" : "; ") + "canonical node set mismatch";
  if (!reach_ok) detail += std::string(detail.empty() ? "" : "; ") + "reachable(10) mismatch";
  report(7, "system trace, reachable set, and the unvisited state 3", trace_ok && nodes_ok && reach_ok,
         detail);
}

void criterion_superposition() {
  fsm::SuperposeResult result =
      fsm::superpose_check(faults::parse_bits("00E00000"), faults::parse_bits("000E0000"));
  report(8, "superposing the single-error sequences is not additive", !result.additive,
         "additive = true");
}

void criterion_kernel_properties() {
  struct Suite {
    const char* name;
    testprops::PropertyResult result;
  };
  std::vector<Suite> suites = {
      {"merge conflicts", testprops::check_merge_conflicts(1500, 0x11)},
      {"equal-value tolerance", testprops::check_equal_value_tolerance(1500, 0x22)},
      {"frame property", testprops::check_frame_property(1500, 0x33)},
      {"seq threading", testprops::check_seq_threading(1500, 0x44)},
  };
  bool ok = true;
  std::string detail;
  for (const auto& suite : suites) {
    if (!suite.result.ok) {
      ok = false;
      detail += std::string(detail.empty() ? "" : "; ") + suite.name + ": " + suite.result.detail;
    }
  }
  report(9, "kernel property suites (1500 random cases each)", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: altbit_acceptance <path-to-cli> [workers]\n";
    return 64;
  }
  setenv("ALTBIT_CLI", argv[1], 1);
  int workers = argc > 2 ? std::stoi(argv[2])
                         : static_cast<int>(std::min(8u, std::thread::hardware_concurrency()));
  if (workers < 1) workers = 1;

  criterion_golden_trace(argv[1]);
  criterion_delivery_counts();
  criterion_bounded_invariant(workers);
  criterion_completion_search(workers);
  criterion_lynch_sweep();
  criterion_ab_sweep();
  criterion_state_space();
  criterion_superposition();
  criterion_kernel_properties();

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures;
}
