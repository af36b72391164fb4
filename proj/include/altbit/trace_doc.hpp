// SPDX-License-Identifier: Apache-2.0
//
// JSON persistence for simulation runs. Field names mirror the protocol's
// state variables (alt, msgt, storedMsgs, pendingMsg, counterMsgs) so the
// documents stay self-describing; unlike the legacy text output, the per-step
// error field carries the true per-event value.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "altbit/checker.hpp"

namespace altbit::doc {

struct MsgDoc {
  std::string receiver;
  std::string msgr;
  int altr = 0;
  std::optional<int> vfy;  // Lynch only

  bool operator==(const MsgDoc&) const = default;
};

struct StateDoc {
  std::map<std::string, int> alt;
  std::map<std::string, int> altr;
  std::map<std::string, int> counter_msgs;
  std::map<std::string, std::string> msgt;
  std::map<std::string, std::vector<std::string>> stored_msgs;
  std::optional<std::map<std::string, int>> altt;  // Lynch transmit bits
  std::optional<std::map<std::string, int>> vfyt;
  std::optional<std::map<std::string, int>> vfyr;
  MsgDoc pending;
  int counter = 0;
  std::string phase;

  bool operator==(const StateDoc&) const = default;
};

struct StepDoc {
  int event = 0;
  std::string phase;
  MsgDoc pending;  // the message delivered during this event
  bool error = false;
  bool accepted = false;
  bool stuttered = false;
  StateDoc state;  // post-event snapshot

  bool operator==(const StepDoc&) const = default;
};

struct InitDoc {
  std::string starter;
  std::string ic;  // "11"-style bits: (ALTT_A, ALTT_B) for AB, the 4-tuple for Lynch
  bool dummy_first = false;
  std::vector<std::string> msgs_a;
  std::vector<std::string> msgs_b;

  bool operator==(const InitDoc&) const = default;
};

struct TraceDocument {
  std::string protocol;  // "ab" | "lynch"
  InitDoc init;
  std::string errors;  // interleaved bit string, one character per event
  std::vector<StepDoc> steps;
  std::vector<std::string> output;  // legacy lines

  bool operator==(const TraceDocument&) const = default;
};

TraceDocument build(const ab::Config& config, const check::RunTrace& run,
                    const faults::InterleavedTrace& errors);
TraceDocument build(const lynch::Config& config, const check::LynchRunTrace& run,
                    const faults::InterleavedTrace& errors);

nlohmann::ordered_json to_json(const TraceDocument& doc);
TraceDocument from_json(const nlohmann::ordered_json& j);

std::string print(const TraceDocument& doc);        // pretty JSON text
TraceDocument parse(const std::string& json_text);  // ParseError on bad input

}  // namespace altbit::doc
