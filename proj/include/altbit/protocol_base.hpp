// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "altbit/error.hpp"

namespace altbit {

enum class Terminal : int { A = 0, B = 1 };

inline Terminal other(Terminal t) { return t == Terminal::A ? Terminal::B : Terminal::A; }
inline int index(Terminal t) { return static_cast<int>(t); }
inline char letter(Terminal t) { return t == Terminal::A ? 'A' : 'B'; }

Terminal terminal_from_letter(char c);  // ParseError on anything but A/a/B/b

// One protocol round cycles SendB -> RecvA -> SendA -> RecvB. Sends carry no
// state change at this level of abstraction; the receive phases do the work.
enum class Phase : int { SendB = 0, RecvA = 1, SendA = 2, RecvB = 3 };

inline Phase next(Phase p) { return static_cast<Phase>((static_cast<int>(p) + 1) % 4); }
inline bool is_receive(Phase p) { return p == Phase::RecvA || p == Phase::RecvB; }

Terminal receiver_of(Phase p);  // PhaseError for send phases
std::string to_string(Phase p);
Phase phase_from_string(const std::string& name);

// What each terminal sends: from_a holds A's outbound payloads in order.
struct Schedules {
  std::vector<std::string> from_a;
  std::vector<std::string> from_b;

  const std::vector<std::string>& from(Terminal t) const {
    return t == Terminal::A ? from_a : from_b;
  }

  bool operator==(const Schedules&) const = default;
};

// "AB1".."AB6" / "BA1".."BA6".
Schedules default_schedules(std::size_t files_per_direction = 6);

// Shared schedule payloads compare by value, not by pointer identity.
inline bool same_schedules(const std::shared_ptr<const Schedules>& a,
                           const std::shared_ptr<const Schedules>& b) {
  return a == b || (a && b && *a == *b);
}

std::string file_label(Terminal sender, int number);

// Placeholder payload a terminal transmits before it has fetched any file.
inline constexpr const char* kGarbagePayload = "garbage";
// Sacrificial first payload used by the dummy-first-file mode.
inline constexpr const char* kDummyPayload = "dummy";

inline bool is_real_payload(const std::string& payload) {
  return payload != kGarbagePayload && payload != kDummyPayload;
}

enum class Outcome {
  Accepted,  // stored, control bit flipped, next file fetched
  Rejected,  // arrived clean but failed the alternation test (already stored)
  Error,     // transmission error detected; resend only
  Stutter,   // both schedules fully delivered; event is a no-op
};

std::string to_string(Outcome o);

}  // namespace altbit
