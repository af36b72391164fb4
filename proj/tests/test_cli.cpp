// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "altbit/trace_doc.hpp"
#include "support/oracle_data.hpp"
#include "support/run_cli.hpp"

using namespace altbit;
using testsupport::CliResult;
using testsupport::run_cli;

TEST_CASE("cli" * doctest::description("binary-level checks; needs ALTBIT_CLI")) {
  if (testsupport::cli_path().empty()) {
    MESSAGE("ALTBIT_CLI not set; skipping the binary-level checks");
    return;
  }

  SUBCASE("the canonical simulation is byte-identical to the reference output") {
    CliResult r = run_cli("simulate --protocol ab --errors canonical --rounds 11 --format coreasm");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text == testdata::kGoldenOutput);
  }

  SUBCASE("json simulations parse back into equal documents") {
    CliResult r = run_cli("simulate --protocol ab --errors none --rounds 6 --format json");
    CHECK(r.exit_code == 0);
    doc::TraceDocument document = doc::parse(r.stdout_text);
    CHECK(document.steps.size() == 12);
    for (const auto& step : document.steps) CHECK(step.accepted);
    CHECK(document.steps.back().state.stored_msgs.at("A").size() == 6);
    CHECK(document.steps.back().state.stored_msgs.at("B").size() == 6);
  }

  SUBCASE("malformed error strings exit with the usage code") {
    CHECK(run_cli("simulate --errors bits:00X0").exit_code == 2);
    CHECK(run_cli("simulate --protocol lynch --dummy-first").exit_code == 2);
    CHECK(run_cli("simulate --bogus-flag").exit_code == 2);
  }

  SUBCASE("check reports the trivial and the guarded bounds") {
    CliResult trivial = run_cli("check --steps 0");
    CHECK(trivial.exit_code == 0);
    CHECK(trivial.stdout_text == "holds (explored 1)\n");
    CHECK(run_cli("check --steps 40").exit_code == 2);
    CliResult small = run_cli("check --steps 10 --workers 2");
    CHECK(small.exit_code == 0);
    CHECK(small.stdout_text == "holds (explored 1024)\n");
  }

  SUBCASE("search prints the trace or none") {
    CliResult found = run_cli("search --complete-at 12");
    CHECK(found.exit_code == 0);
    CHECK(found.stdout_text == "000000000000\n");
    CliResult none = run_cli("search --complete-at 11 --expect-found");
    CHECK(none.exit_code == 1);
    CHECK(none.stdout_text == "none\n");
  }

  SUBCASE("sweeps print their valid sets") {
    CliResult lynch_sweep = run_cli("sweep --protocol lynch");
    CHECK(lynch_sweep.exit_code == 0);
    CHECK(lynch_sweep.stdout_text.find("valid: 2 8 9 15\n") != std::string::npos);

    CliResult ab_sweep = run_cli("sweep --protocol ab --starter A");
    CHECK(ab_sweep.exit_code == 0);
    CHECK(ab_sweep.stdout_text.find("valid: (0,1) (1,0)\n") != std::string::npos);

    CliResult dummy = run_cli("sweep --protocol ab --starter B --dummy-first");
    CHECK(dummy.stdout_text.find("valid: (0,0) (0,1) (1,0) (1,1)\n") != std::string::npos);
  }

  SUBCASE("fsm writes dot files") {
    std::string path = "cli_fsm_test.dot";
    CliResult r = run_cli("fsm --errors canonical --dot " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("nodes: 2 4 5 9 13\n") != std::string::npos);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string dot((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(dot.find("digraph fsm {") != std::string::npos);
    CHECK(dot.find("5 [fillcolor=red]") != std::string::npos);
    in.close();
    std::remove(path.c_str());
  }

  SUBCASE("motif prints the label traces") {
    CliResult r = run_cli("motif --errors bits:00E0000");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text ==
          "errors: 0010000\n"
          "A: 1 4 1 2 1 4 1 4\n"
          "B: 4 1 4 1 3 1 4 1\n"
          "system: 4 13 4 5 3 13 4 13\n");
  }
}
