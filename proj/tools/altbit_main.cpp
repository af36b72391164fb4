// SPDX-License-Identifier: Apache-2.0
//
// Command-line workbench: simulate | check | search | sweep | fsm | motif.
// Exit codes: 0 success/holds, 1 property failure or expected-result missing,
// 2 usage or input errors.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "altbit/checker.hpp"
#include "altbit/faults.hpp"
#include "altbit/statespace.hpp"
#include "altbit/trace_doc.hpp"

namespace {

using namespace altbit;

struct ErrorSelection {
  faults::InterleavedTrace trace;
  int rounds = 0;
};

// --errors accepts canonical | none | bits:<string>; --rounds must agree with
// an explicit bit string when both are given.
ErrorSelection resolve_errors(const std::string& errors_opt, int rounds, bool rounds_explicit) {
  ErrorSelection out;
  if (errors_opt == "canonical") {
    faults::PerRoundTraces canonical = faults::canonical();
    if (rounds < 1 || rounds > static_cast<int>(canonical.err_a.size())) {
      throw InvalidConfigError("the canonical error traces cover 1..11 rounds");
    }
    canonical.err_a.resize(static_cast<std::size_t>(rounds));
    canonical.err_b.resize(static_cast<std::size_t>(rounds));
    out.trace = faults::to_interleaved(canonical);
    out.rounds = rounds;
    return out;
  }
  if (errors_opt == "none") {
    if (rounds < 1) throw InvalidConfigError("rounds must be at least 1");
    out.trace = faults::to_interleaved(faults::all_false(static_cast<std::size_t>(rounds)));
    out.rounds = rounds;
    return out;
  }
  if (errors_opt.rfind("bits:", 0) == 0) {
    out.trace = faults::parse_bits(std::string_view(errors_opt).substr(5));
    if (out.trace.size() == 0) throw InvalidConfigError("the error bit string must be nonempty");
    out.rounds = static_cast<int>((out.trace.size() + 1) / 2);
    if (rounds_explicit && rounds != out.rounds) {
      throw InvalidConfigError("--rounds disagrees with the length of the error bit string");
    }
    return out;
  }
  throw InvalidConfigError("--errors must be canonical, none, or bits:<string>");
}

ab::Config make_ab_config(const std::string& starter, const std::string& ic, bool dummy_first) {
  if (ic.size() != 2 || ic.find_first_not_of("01") != std::string::npos) {
    throw InvalidConfigError("--ic for the alternating-bit protocol is two bits (ALTT_A ALTT_B)");
  }
  ab::Config config;
  config.starter = terminal_from_letter(starter.at(0));
  config.altt0_a = ic[0] == '1';
  config.altt0_b = ic[1] == '1';
  config.dummy_first = dummy_first;
  return config;
}

lynch::Config make_lynch_config(const std::string& starter, const std::string& ic) {
  if (ic.size() != 4 || ic.find_first_not_of("01") != std::string::npos) {
    throw InvalidConfigError("--ic for the Lynch protocol is four bits (ALT_A ALTT_A ALT_B ALTT_B)");
  }
  lynch::Config config;
  config.starter = terminal_from_letter(starter.at(0));
  config.ic = lynch::Ic{ic[0] - '0', ic[1] - '0', ic[2] - '0', ic[3] - '0'};
  return config;
}

int cmd_simulate(const std::string& protocol, const ErrorSelection& errors,
                 const std::string& format, const std::string& starter, const std::string& ic,
                 bool dummy_first, bool ic_explicit) {
  if (protocol == "ab") {
    ab::Config config = make_ab_config(starter, ic_explicit ? ic : "11", dummy_first);
    check::RunTrace run = check::run_trace(config, errors.trace);
    if (format == "json") {
      std::cout << doc::print(doc::build(config, run, errors.trace));
    } else {
      for (const auto& line : run.output) std::cout << line << "\n";
    }
    return 0;
  }
  if (dummy_first) throw InvalidConfigError("--dummy-first applies to the ab protocol only");
  lynch::Config config = make_lynch_config(starter, ic_explicit ? ic : "0001");
  check::LynchRunTrace run = check::run_trace(config, errors.trace);
  if (format == "json") {
    std::cout << doc::print(doc::build(config, run, errors.trace));
  } else {
    for (const auto& line : run.output) std::cout << line << "\n";
  }
  return 0;
}

int cmd_check(int steps, const std::string& invariant, int workers) {
  if (invariant != "consistent-prefix") {
    throw InvalidConfigError("supported invariants: consistent-prefix");
  }
  check::ExploreOptions options;
  options.workers = workers;
  check::Verdict verdict = check::explore(
      steps, [](const ab::State& st, int) { return check::consistent_prefix(st); }, options);
  if (verdict.holds) {
    std::cout << "holds (explored " << verdict.explored << ")\n";
    return 0;
  }
  const auto& cx = *verdict.counterexample;
  std::cout << "violated at event " << cx.failing_event << " by "
            << faults::to_bit_string(cx.trace) << "\n";
  return 1;
}

int cmd_search(int complete_at, int workers, bool expect_found) {
  std::optional<faults::InterleavedTrace> found =
      check::search_completion(complete_at, ab::Config{}, workers);
  if (!found) {
    std::cout << "none\n";
    return expect_found ? 1 : 0;
  }
  std::cout << faults::to_bit_string(*found) << "\n";
  return 0;
}

std::string ic_bits_to_string(const std::vector<int>& bits) {
  std::string out = "(";
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(bits[i]);
  }
  return out + ")";
}

int cmd_sweep(const std::string& protocol, const std::string& starter, bool dummy_first) {
  if (protocol == "lynch") {
    if (dummy_first) throw InvalidConfigError("--dummy-first applies to the ab protocol only");
    std::vector<check::IcResult> results = check::sweep_lynch();
    std::string valid_rows;
    for (std::size_t row = 0; row < results.size(); ++row) {
      const auto& result = results[row];
      std::cout << "ic " << row + 1 << " " << ic_bits_to_string(result.ic) << ": "
                << (result.valid ? "valid" : "invalid: " + result.witness) << "\n";
      if (result.valid) valid_rows += " " + std::to_string(row + 1);
    }
    std::cout << "valid:" << valid_rows << "\n";
    return 0;
  }
  std::vector<check::IcResult> results =
      check::sweep_ab(terminal_from_letter(starter.at(0)), dummy_first);
  std::string valid_pairs;
  for (const auto& result : results) {
    std::cout << "ic " << ic_bits_to_string(result.ic) << ": "
              << (result.valid ? "valid" : "invalid: " + result.witness) << "\n";
    if (result.valid) valid_pairs += " " + ic_bits_to_string(result.ic);
  }
  std::cout << "valid:" << valid_pairs << "\n";
  return 0;
}

int cmd_fsm(const ErrorSelection& errors, const std::string& dot_path) {
  check::RunTrace run = check::run_trace(ab::Config{}, errors.trace);
  fsm::FsmGraph graph = fsm::extract_fsm({run});
  std::string dot = fsm::to_dot(graph);
  if (dot_path.empty()) {
    std::cout << dot;
  } else {
    std::ofstream out(dot_path, std::ios::binary);
    if (!out) throw InvalidConfigError("cannot open '" + dot_path + "' for writing");
    out << dot;
  }
  std::cout << "nodes:";
  for (int node : graph.nodes) std::cout << " " << node;
  std::cout << "\n";
  if (!dot_path.empty()) std::cout << "wrote " << dot_path << "\n";
  return 0;
}

int cmd_motif(const ErrorSelection& errors) {
  fsm::Motif motif = fsm::motif(errors.trace);
  std::cout << "errors: " << faults::to_bit_string(motif.error_seq) << "\n";
  std::cout << "A:";
  for (fsm::TerminalLabel label : motif.a_trace) std::cout << " " << static_cast<int>(label);
  std::cout << "\nB:";
  for (fsm::TerminalLabel label : motif.b_trace) std::cout << " " << static_cast<int>(label);
  std::cout << "\nsystem:";
  for (std::size_t i = 0; i < motif.a_trace.size(); ++i) {
    std::cout << " " << fsm::sys_index(motif.a_trace[i], motif.b_trace[i]);
  }
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating-bit / Lynch protocol workbench"};
  app.require_subcommand(1);

  std::string protocol = "ab";
  std::string errors_opt = "canonical";
  std::string format = "coreasm";
  std::string starter = "B";
  std::string ic;
  int rounds = 11;
  bool dummy_first = false;

  CLI::App* simulate = app.add_subcommand("simulate", "Run one lockstep simulation");
  simulate->add_option("--protocol", protocol)->check(CLI::IsMember({"ab", "lynch"}));
  simulate->add_option("--errors", errors_opt, "canonical | none | bits:<string>");
  simulate->add_option("--rounds", rounds)->check(CLI::PositiveNumber);
  simulate->add_option("--format", format)->check(CLI::IsMember({"coreasm", "json"}));
  simulate->add_option("--starter", starter)->check(CLI::IsMember({"A", "B"}));
  simulate->add_option("--ic", ic, "initial control bits (2 for ab, 4 for lynch)");
  simulate->add_flag("--dummy-first", dummy_first, "prepend a sacrificial first file");

  int steps = 22;
  int workers = 1;
  std::string invariant = "consistent-prefix";
  CLI::App* check_cmd = app.add_subcommand("check", "Exhaustively check an invariant");
  check_cmd->add_option("--steps", steps);
  check_cmd->add_option("--invariant", invariant);
  check_cmd->add_option("--workers", workers)->check(CLI::PositiveNumber);

  int complete_at = 22;
  bool expect_found = false;
  CLI::App* search = app.add_subcommand("search", "Search for a run completing at an exact event");
  search->add_option("--complete-at", complete_at)->required();
  search->add_option("--workers", workers)->check(CLI::PositiveNumber);
  search->add_flag("--expect-found", expect_found, "exit 1 when no trace is found");

  CLI::App* sweep = app.add_subcommand("sweep", "Sweep the initial conditions");
  sweep->add_option("--protocol", protocol)->required()->check(CLI::IsMember({"ab", "lynch"}));
  sweep->add_option("--starter", starter)->check(CLI::IsMember({"A", "B"}));
  sweep->add_flag("--dummy-first", dummy_first);

  std::string dot_path;
  CLI::App* fsm_cmd = app.add_subcommand("fsm", "Extract the finite-state machine of a run");
  fsm_cmd->add_option("--errors", errors_opt, "canonical | none | bits:<string>");
  fsm_cmd->add_option("--rounds", rounds)->check(CLI::PositiveNumber);
  fsm_cmd->add_option("--dot", dot_path, "write DOT to this path");

  CLI::App* motif_cmd = app.add_subcommand("motif", "Print the automaton motif of an error sequence");
  motif_cmd->add_option("--errors", errors_opt, "canonical | none | bits:<string>");
  motif_cmd->add_option("--rounds", rounds)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (simulate->parsed()) {
      ErrorSelection errors =
          resolve_errors(errors_opt, rounds, simulate->count("--rounds") > 0);
      return cmd_simulate(protocol, errors, format, starter, ic, dummy_first,
                          simulate->count("--ic") > 0);
    }
    if (check_cmd->parsed()) return cmd_check(steps, invariant, workers);
    if (search->parsed()) return cmd_search(complete_at, workers, expect_found);
    if (sweep->parsed()) return cmd_sweep(protocol, starter, dummy_first);
    if (fsm_cmd->parsed()) {
      return cmd_fsm(resolve_errors(errors_opt, rounds, fsm_cmd->count("--rounds") > 0), dot_path);
    }
    if (motif_cmd->parsed()) {
      return cmd_motif(resolve_errors(errors_opt, rounds, motif_cmd->count("--rounds") > 0));
    }
  } catch (const OracleMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
