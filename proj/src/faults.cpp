// SPDX-License-Identifier: Apache-2.0
#include "altbit/faults.hpp"

#include "altbit/rng.hpp"

namespace altbit::faults {

PerRoundTraces canonical() {
  return PerRoundTraces{
      {false, false, true, false, false, false, true, false, true, false, false},
      {false, false, true, true, false, true, true, false, true, false, false},
  };
}

PerRoundTraces all_false(std::size_t rounds) {
  return PerRoundTraces{std::vector<bool>(rounds, false), std::vector<bool>(rounds, false)};
}

InterleavedTrace to_interleaved(const PerRoundTraces& traces) {
  if (traces.err_a.size() != traces.err_b.size()) {
    throw LengthMismatchError("per-round traces must have equal lengths");
  }
  InterleavedTrace out;
  out.bits.reserve(2 * traces.err_a.size());
  for (std::size_t k = 0; k < traces.err_a.size(); ++k) {
    out.bits.push_back(traces.err_a[k]);
    out.bits.push_back(traces.err_b[k]);
  }
  return out;
}

PerRoundTraces to_per_round(const InterleavedTrace& trace) {
  if (trace.bits.size() % 2 != 0) {
    throw LengthMismatchError("interleaved trace must have even length to split per round");
  }
  PerRoundTraces out;
  out.err_a.reserve(trace.bits.size() / 2);
  out.err_b.reserve(trace.bits.size() / 2);
  for (std::size_t i = 0; i < trace.bits.size(); i += 2) {
    out.err_a.push_back(trace.bits[i]);
    out.err_b.push_back(trace.bits[i + 1]);
  }
  return out;
}

InterleavedTrace parse_bits(std::string_view text) {
  InterleavedTrace out;
  out.bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '0':
      case 'f':
      case 'F':
      case '.':
        out.bits.push_back(false);
        break;
      case '1':
      case 't':
      case 'T':
      case 'E':
      case 'e':
        out.bits.push_back(true);
        break;
      case '-':
        break;
      default:
        throw ParseError(std::string("unexpected character '") + text[i] + "' in error trace", i);
    }
  }
  return out;
}

std::string to_bit_string(const InterleavedTrace& trace) {
  std::string out;
  out.reserve(trace.bits.size());
  for (bool bit : trace.bits) out.push_back(bit ? '1' : '0');
  return out;
}

InterleavedTrace random_trace(std::size_t n_events, std::uint64_t seed, double error_probability) {
  if (error_probability < 0.0 || error_probability > 1.0) {
    throw InvalidConfigError("error probability must lie in [0, 1]");
  }
  SplitMix64 rng(seed);
  InterleavedTrace out;
  out.bits.reserve(n_events);
  for (std::size_t i = 0; i < n_events; ++i) {
    // next_unit() < 1.0 always holds, so p = 1 forces an error at every event.
    out.bits.push_back(rng.next_unit() < error_probability);
  }
  return out;
}

InterleavedTrace trace_from_index(int n_events, std::uint64_t index) {
  InterleavedTrace out;
  out.bits.reserve(static_cast<std::size_t>(n_events));
  for (int k = 0; k < n_events; ++k) out.bits.push_back(((index >> k) & 1) != 0);
  return out;
}

EnumerationRange::EnumerationRange(int n_events) : n_events_(n_events) {
  if (n_events < 0 || n_events > kMaxEnumerationEvents) {
    throw BoundExceededError("enumeration bound must lie in [0, " +
                             std::to_string(kMaxEnumerationEvents) + "], got " +
                             std::to_string(n_events));
  }
}

EnumerationRange enumerate(int n_events) { return EnumerationRange(n_events); }

}  // namespace altbit::faults
