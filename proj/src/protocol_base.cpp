// SPDX-License-Identifier: Apache-2.0
#include "altbit/protocol_base.hpp"

namespace altbit {

Terminal terminal_from_letter(char c) {
  switch (c) {
    case 'A':
    case 'a':
      return Terminal::A;
    case 'B':
    case 'b':
      return Terminal::B;
    default:
      throw ParseError(std::string("expected terminal A or B, got '") + c + "'", 0);
  }
}

Terminal receiver_of(Phase p) {
  switch (p) {
    case Phase::RecvA:
      return Terminal::A;
    case Phase::RecvB:
      return Terminal::B;
    default:
      throw PhaseError("phase " + to_string(p) + " is not a receive phase");
  }
}

std::string to_string(Phase p) {
  switch (p) {
    case Phase::SendB:
      return "SendB";
    case Phase::RecvA:
      return "RecvA";
    case Phase::SendA:
      return "SendA";
    case Phase::RecvB:
      return "RecvB";
  }
  return "?";
}

Phase phase_from_string(const std::string& name) {
  for (Phase p : {Phase::SendB, Phase::RecvA, Phase::SendA, Phase::RecvB}) {
    if (to_string(p) == name) return p;
  }
  throw ParseError("unknown phase name '" + name + "'", 0);
}

Schedules default_schedules(std::size_t files_per_direction) {
  Schedules out;
  for (std::size_t i = 1; i <= files_per_direction; ++i) {
    out.from_a.push_back(file_label(Terminal::A, static_cast<int>(i)));
    out.from_b.push_back(file_label(Terminal::B, static_cast<int>(i)));
  }
  return out;
}

std::string file_label(Terminal sender, int number) {
  std::string label;
  label += letter(sender);
  label += letter(other(sender));
  label += std::to_string(number);
  return label;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Accepted:
      return "accepted";
    case Outcome::Rejected:
      return "rejected";
    case Outcome::Error:
      return "error";
    case Outcome::Stutter:
      return "stutter";
  }
  return "?";
}

}  // namespace altbit
