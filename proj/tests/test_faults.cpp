// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "altbit/faults.hpp"

using namespace altbit;

TEST_CASE("canonical traces match the published error pattern") {
  faults::PerRoundTraces traces = faults::canonical();
  REQUIRE(traces.err_a.size() == 11);
  REQUIRE(traces.err_b.size() == 11);
  CHECK(traces.at_a(1) == false);
  CHECK(traces.at_a(3) == true);
  CHECK(traces.at_a(7) == true);
  CHECK(traces.at_a(9) == true);
  CHECK(traces.at_b(3) == true);
  CHECK(traces.at_b(4) == true);
  CHECK(traces.at_b(6) == true);
  CHECK(traces.at_b(11) == false);
}

TEST_CASE("to_interleaved maps rounds onto events") {
  SUBCASE("all-false stays all-false") {
    auto trace = faults::to_interleaved(faults::all_false(4));
    CHECK(trace.size() == 8);
    for (std::size_t k = 1; k <= 8; ++k) CHECK(trace.at_event(k) == false);
  }
  SUBCASE("canonical round 3 lands on events 5 and 6") {
    auto trace = faults::to_interleaved(faults::canonical());
    CHECK(trace.size() == 22);
    CHECK(trace.at_event(5) == true);
    CHECK(trace.at_event(6) == true);
    CHECK(trace.at_event(1) == false);
  }
  SUBCASE("single round") {
    auto trace = faults::to_interleaved(faults::PerRoundTraces{{true}, {false}});
    CHECK(trace.bits == std::vector<bool>{true, false});
  }
}

TEST_CASE("splitting back is the inverse for even lengths") {
  auto per_round = faults::canonical();
  CHECK(faults::to_per_round(faults::to_interleaved(per_round)) == per_round);
  CHECK_THROWS_AS(faults::to_per_round(faults::parse_bits("010")), LengthMismatchError);
}

TEST_CASE("parse_bits accepts the documented alphabet") {
  CHECK(faults::parse_bits("0000").bits == std::vector<bool>(4, false));
  CHECK(faults::parse_bits("00E0").bits == std::vector<bool>{false, false, true, false});
  CHECK(faults::parse_bits("tF.1-e").bits == std::vector<bool>{true, false, false, true, true});
  CHECK_THROWS_AS(faults::parse_bits("00X0"), ParseError);
  try {
    faults::parse_bits("00X0");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("enumeration is exhaustive, duplicate-free, and ordered") {
  SUBCASE("length 0 yields exactly the empty trace") {
    auto range = faults::enumerate(0);
    CHECK(range.count() == 1);
    CHECK((*range.begin()).size() == 0);
  }
  SUBCASE("length 2 yields four traces") { CHECK(faults::enumerate(2).count() == 4); }
  SUBCASE("event 1 is the least significant bit") {
    CHECK(faults::trace_from_index(3, 1).bits == std::vector<bool>{true, false, false});
    CHECK(faults::trace_from_index(3, 4).bits == std::vector<bool>{false, false, true});
  }
  SUBCASE("no duplicates up to length 12") {
    std::set<std::vector<bool>> seen;
    std::uint64_t count = 0;
    for (const auto& trace : faults::enumerate(12)) {
      seen.insert(trace.bits);
      ++count;
    }
    CHECK(count == (1u << 12));
    CHECK(seen.size() == (1u << 12));
  }
  SUBCASE("bounds are guarded") { CHECK_THROWS_AS(faults::enumerate(31), BoundExceededError); }
}

TEST_CASE("random traces are reproducible and respect the probability limits") {
  CHECK(faults::random_trace(64, 7, 0.0).bits == std::vector<bool>(64, false));
  CHECK(faults::random_trace(64, 7, 1.0).bits == std::vector<bool>(64, true));
  CHECK(faults::random_trace(64, 7, 0.5) == faults::random_trace(64, 7, 0.5));
  CHECK(faults::random_trace(64, 7, 0.5) != faults::random_trace(64, 8, 0.5));
  CHECK_THROWS_AS(faults::random_trace(4, 1, 1.5), InvalidConfigError);
}
