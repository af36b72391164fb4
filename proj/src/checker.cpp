// SPDX-License-Identifier: Apache-2.0
#include "altbit/checker.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace altbit::check {

namespace {

// Event index of terminal A's receive within the given round.
std::size_t a_event_for_round(int round, Terminal starter) {
  return starter == Terminal::B ? static_cast<std::size_t>(2 * round - 1)
                                : static_cast<std::size_t>(2 * round);
}

int checked_bound(int n_events) {
  if (n_events < 0 || n_events > faults::kMaxEnumerationEvents) {
    throw BoundExceededError("event bound must lie in [0, " +
                             std::to_string(faults::kMaxEnumerationEvents) + "], got " +
                             std::to_string(n_events));
  }
  return n_events;
}

int clamp_workers(int workers, std::uint64_t total) {
  int w = std::clamp(workers, 1, 64);
  return static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(w), std::max<std::uint64_t>(total, 1)));
}

constexpr std::uint64_t kNoIndex = std::numeric_limits<std::uint64_t>::max();

void record_min(std::atomic<std::uint64_t>& best, std::uint64_t idx) {
  std::uint64_t current = best.load(std::memory_order_relaxed);
  while (idx < current && !best.compare_exchange_weak(current, idx)) {
  }
}

// Scans enumeration indices [lo, hi); per_run returns the found index or
// kNoIndex. Stops early once nothing below the global best can be found here.
template <typename PerRun>
void scan_range(std::uint64_t lo, std::uint64_t hi, std::atomic<std::uint64_t>& best,
                PerRun&& per_run) {
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    if (idx > best.load(std::memory_order_relaxed)) return;
    if (per_run(idx) != kNoIndex) {
      record_min(best, idx);
      return;
    }
  }
}

template <typename PerRun>
std::uint64_t parallel_first_index(std::uint64_t total, int workers, const PerRun& per_run) {
  std::atomic<std::uint64_t> best{kNoIndex};
  if (workers <= 1) {
    scan_range(0, total, best, per_run);
    return best.load();
  }
  std::uint64_t chunk = (total + static_cast<std::uint64_t>(workers) - 1) / workers;
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
    std::uint64_t hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([lo, hi, &best, &per_run] { scan_range(lo, hi, best, per_run); });
  }
  for (auto& t : threads) t.join();
  return best.load();
}

std::string lynch_legacy_line(const lynch::State& pre, const lynch::ReceiveEvent& event,
                              bool err_a_value) {
  Terminal receiver = event.receiver;
  Terminal sender = other(receiver);
  int line_no = 2 * pre.counter - 1 + (receiver == pre.starter ? 1 : 0);
  bool altr_shown = event.error ? pre.altr[index(receiver)] : event.delivered.alt;

  std::string line = std::to_string(line_no);
  line += " Terminal ";
  line += letter(sender);
  line += " is sending ";
  line += file_label(sender, pre.file_number[index(sender)]);
  line += ", error(" + std::to_string(pre.counter) + ") = ";
  line += err_a_value ? "true" : "false";
  line += ", ALTR(";
  line += letter(receiver);
  line += ") = ";
  line += altr_shown ? "true" : "false";
  line += ", ALTT(";
  line += letter(receiver);
  line += ") = ";
  line += pre.altt[index(receiver)] ? "true" : "false";
  return line;
}

}  // namespace

RunTrace run_trace(const ab::Config& config, const faults::InterleavedTrace& errors) {
  RunTrace trace;
  trace.initial = ab::init(config);
  ab::State st = trace.initial;
  trace.steps.reserve(errors.size());
  for (std::size_t event = 1; event <= errors.size(); ++event) {
    StepRecord record;
    record.event = static_cast<int>(event);
    record.phase = st.phase;
    bool err_a_value = errors.at_event(a_event_for_round(st.counter, st.starter));
    ab::State pre = st;
    record.receive = ab::step_receive(st, errors.at_event(event));
    trace.output.push_back(ab::legacy_line(pre, record.receive, err_a_value));
    record.post = st;
    trace.steps.push_back(std::move(record));
  }
  return trace;
}

LynchRunTrace run_trace(const lynch::Config& config, const faults::InterleavedTrace& errors) {
  LynchRunTrace trace;
  trace.initial = lynch::init(config);
  lynch::State st = trace.initial;
  trace.steps.reserve(errors.size());
  for (std::size_t event = 1; event <= errors.size(); ++event) {
    LynchStepRecord record;
    record.event = static_cast<int>(event);
    record.phase = st.phase;
    bool err_a_value = errors.at_event(a_event_for_round(st.counter, st.starter));
    lynch::State pre = st;
    record.receive = lynch::step_receive(st, errors.at_event(event));
    trace.output.push_back(lynch_legacy_line(pre, record.receive, err_a_value));
    record.post = st;
    trace.steps.push_back(std::move(record));
  }
  return trace;
}

bool consistent_prefix(const ab::State& st) {
  for (Terminal t : {Terminal::A, Terminal::B}) {
    const auto& stored = st.stored[index(t)];
    const auto& scheduled = st.schedule_of(other(t));
    if (stored.size() > scheduled.size()) return false;
    for (std::size_t i = 0; i < stored.size(); ++i) {
      if (stored[i] != scheduled[i]) return false;
    }
  }
  return true;
}

Verdict explore(int n_events, const StatePredicate& invariant, const ExploreOptions& options) {
  int n = checked_bound(n_events);
  const std::uint64_t total = std::uint64_t{1} << n;
  const ab::State init_state = ab::init(options.config);

  // Returns the index when its run violates the invariant, kNoIndex otherwise.
  auto per_run = [&](std::uint64_t idx) -> std::uint64_t {
    thread_local ab::State st;
    st = init_state;
    for (int k = 1; k <= n; ++k) {
      ab::step_receive(st, ((idx >> (k - 1)) & 1) != 0, options.accept_override);
      if (!invariant(st, k)) return idx;
    }
    return kNoIndex;
  };

  std::uint64_t found = parallel_first_index(total, clamp_workers(options.workers, total), per_run);

  Verdict verdict;
  if (found == kNoIndex) {
    verdict.holds = true;
    verdict.explored = total;
    return verdict;
  }

  verdict.holds = false;
  verdict.explored = found + 1;
  Counterexample cx;
  cx.trace = faults::trace_from_index(n, found);
  ab::State st = init_state;
  for (int k = 1; k <= n; ++k) {
    ab::step_receive(st, cx.trace.at_event(static_cast<std::size_t>(k)), options.accept_override);
    if (!invariant(st, k)) {
      cx.failing_event = k;
      cx.state = st;
      break;
    }
  }
  verdict.counterexample = std::move(cx);
  return verdict;
}

std::optional<int> completion_event(const ab::Config& config,
                                    const faults::InterleavedTrace& errors) {
  ab::State st = ab::init(config);
  if (st.complete()) return 0;
  for (std::size_t event = 1; event <= errors.size(); ++event) {
    ab::step_receive(st, errors.at_event(event));
    if (st.complete()) return static_cast<int>(event);
  }
  return std::nullopt;
}

std::optional<faults::InterleavedTrace> search_completion(int n_events, const ab::Config& config,
                                                          int workers) {
  int n = checked_bound(n_events);
  const std::uint64_t total = std::uint64_t{1} << n;
  const ab::State init_state = ab::init(config);

  auto per_run = [&](std::uint64_t idx) -> std::uint64_t {
    thread_local ab::State st;
    st = init_state;
    for (int k = 1; k <= n; ++k) {
      ab::step_receive(st, ((idx >> (k - 1)) & 1) != 0);
      if (st.complete()) {
        // Completion is absorbing, so the first completion event decides.
        return k == n ? idx : kNoIndex;
      }
    }
    return kNoIndex;
  };

  std::uint64_t found = parallel_first_index(total, clamp_workers(workers, total), per_run);
  if (found == kNoIndex) return std::nullopt;
  return faults::trace_from_index(n, found);
}

bool ic_valid_lynch(const lynch::Ic& ic) {
  return ic.alt_a != ic.altt_b && ic.altt_a == ic.alt_b;
}

namespace {

// Checks that the first two genuine files of `scheduled` lead the stored list
// once sacrificial payloads are ignored.
bool first_two_delivered(const std::vector<std::string>& stored,
                         const std::vector<std::string>& scheduled, char receiver,
                         std::string* witness) {
  std::vector<std::string> got;
  for (const auto& payload : stored) {
    if (is_real_payload(payload)) got.push_back(payload);
  }
  std::vector<std::string> want;
  for (const auto& payload : scheduled) {
    if (is_real_payload(payload)) want.push_back(payload);
    if (want.size() == 2) break;
  }
  for (std::size_t i = 0; i < want.size(); ++i) {
    if (i >= got.size()) {
      *witness = std::string(1, receiver) + " stored only " + std::to_string(got.size()) +
                 " genuine file(s) in 3 error-free rounds";
      return false;
    }
    if (got[i] != want[i]) {
      *witness = std::string(1, receiver) + " stored " + got[i] + " at position " +
                 std::to_string(i + 1) + ", expected " + want[i];
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<IcResult> sweep_lynch() {
  std::vector<IcResult> results;
  results.reserve(16);
  for (int row = 1; row <= 16; ++row) {
    lynch::Ic ic = lynch::ic_from_row(row);
    lynch::Config config;
    config.ic = ic;
    lynch::State st = lynch::run(config, faults::all_false(3), 3);

    IcResult result;
    result.ic = {ic.alt_a, ic.altt_a, ic.alt_b, ic.altt_b};
    std::string witness;
    bool ok_a = first_two_delivered(st.stored[index(Terminal::A)], st.schedule_of(Terminal::B),
                                    'A', &witness);
    bool ok_b = ok_a && first_two_delivered(st.stored[index(Terminal::B)],
                                            st.schedule_of(Terminal::A), 'B', &witness);
    result.valid = ok_a && ok_b;
    result.witness = result.valid ? "" : witness;

    if (result.valid != ic_valid_lynch(ic)) {
      throw OracleMismatchError("simulation verdict for initial condition " +
                                std::to_string(row) + " disagrees with the closed-form predicate");
    }
    results.push_back(std::move(result));
  }
  return results;
}

std::vector<IcResult> sweep_ab(Terminal starter, bool dummy_first) {
  std::vector<IcResult> results;
  results.reserve(4);
  for (int a0 = 0; a0 <= 1; ++a0) {
    for (int b0 = 0; b0 <= 1; ++b0) {
      ab::Config config;
      config.starter = starter;
      config.altt0_a = a0 != 0;
      config.altt0_b = b0 != 0;
      config.dummy_first = dummy_first;

      ab::State st = ab::init(config);
      for (int event = 0; event < 6; ++event) ab::step_receive(st, false);

      IcResult result;
      result.ic = {a0, b0};
      std::string witness;
      bool ok_a = first_two_delivered(st.stored[index(Terminal::A)], st.schedule_of(Terminal::B),
                                      'A', &witness);
      bool ok_b = ok_a && first_two_delivered(st.stored[index(Terminal::B)],
                                              st.schedule_of(Terminal::A), 'B', &witness);
      result.valid = ok_a && ok_b;
      result.witness = result.valid ? "" : witness;
      results.push_back(std::move(result));
    }
  }
  return results;
}

}  // namespace altbit::check
