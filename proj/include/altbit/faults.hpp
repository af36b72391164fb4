// SPDX-License-Identifier: Apache-2.0
//
// Fault-injection inputs: the canonical per-round error traces, interleaved
// per-event traces, exhaustive enumeration, and seeded random generation.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "altbit/error.hpp"

namespace altbit::faults {

// One boolean per receive event, 1-based; with terminal B starting, odd events
// hit terminal A and even events hit terminal B.
struct InterleavedTrace {
  std::vector<bool> bits;

  std::size_t size() const { return bits.size(); }
  // 1-based event lookup; events beyond the trace read as no-error.
  bool at_event(std::size_t event) const {
    return event >= 1 && event <= bits.size() && bits[event - 1];
  }

  bool operator==(const InterleavedTrace&) const = default;
};

// Per-round traces indexed 1-based by round: entry k is the error hitting the
// message that arrives at that terminal in round k.
struct PerRoundTraces {
  std::vector<bool> err_a;
  std::vector<bool> err_b;

  bool at_a(std::size_t round) const { return round >= 1 && round <= err_a.size() && err_a[round - 1]; }
  bool at_b(std::size_t round) const { return round >= 1 && round <= err_b.size() && err_b[round - 1]; }

  bool operator==(const PerRoundTraces&) const = default;
};

// The 11-round error pattern both terminals are driven with in the reference
// run (Lynch's original sequence).
PerRoundTraces canonical();

PerRoundTraces all_false(std::size_t rounds);

// bits[2k-1] = err_a[k], bits[2k] = err_b[k].
InterleavedTrace to_interleaved(const PerRoundTraces& traces);

// Inverse of to_interleaved; requires an even-length trace.
PerRoundTraces to_per_round(const InterleavedTrace& trace);

// Accepted alphabet: 0/f/F/. for no error, 1/t/T/E/e for error, '-' ignored.
InterleavedTrace parse_bits(std::string_view text);

std::string to_bit_string(const InterleavedTrace& trace);

// Deterministic generator (splitmix64; see rng.hpp) with per-event error
// probability p.
InterleavedTrace random_trace(std::size_t n_events, std::uint64_t seed, double error_probability);

inline constexpr int kMaxEnumerationEvents = 30;

// Trace number `index` of length n_events in enumeration order: event k is bit
// k-1 of the index, so event 1 is the least significant bit.
InterleavedTrace trace_from_index(int n_events, std::uint64_t index);

// All 2^n traces of length n in stable binary-counting order.
class EnumerationRange {
 public:
  explicit EnumerationRange(int n_events);

  class Iterator {
   public:
    Iterator(int n_events, std::uint64_t index) : n_events_(n_events), index_(index) {}
    InterleavedTrace operator*() const { return trace_from_index(n_events_, index_); }
    Iterator& operator++() {
      ++index_;
      return *this;
    }
    bool operator!=(const Iterator& other) const { return index_ != other.index_; }

   private:
    int n_events_;
    std::uint64_t index_;
  };

  Iterator begin() const { return Iterator(n_events_, 0); }
  Iterator end() const { return Iterator(n_events_, count()); }
  std::uint64_t count() const { return std::uint64_t{1} << n_events_; }

 private:
  int n_events_;
};

EnumerationRange enumerate(int n_events);

}  // namespace altbit::faults
