// SPDX-License-Identifier: Apache-2.0
#include "altbit/trace_doc.hpp"

namespace altbit::doc {

using nlohmann::ordered_json;

namespace {

std::string key(Terminal t) { return std::string(1, letter(t)); }

template <typename T>
std::map<std::string, T> per_terminal(const std::array<T, 2>& values) {
  return {{key(Terminal::A), values[0]}, {key(Terminal::B), values[1]}};
}

std::map<std::string, int> per_terminal_bits(const std::array<bool, 2>& values) {
  return {{key(Terminal::A), values[0] ? 1 : 0}, {key(Terminal::B), values[1] ? 1 : 0}};
}

MsgDoc msg_doc(const ab::PendingMsg& msg) {
  MsgDoc out;
  out.receiver = key(msg.receiver);
  out.msgr = msg.payload;
  out.altr = msg.alt ? 1 : 0;
  return out;
}

MsgDoc msg_doc(const lynch::PendingMsg& msg) {
  MsgDoc out;
  out.receiver = key(msg.receiver);
  out.msgr = msg.payload;
  out.altr = msg.alt ? 1 : 0;
  out.vfy = msg.vfy ? 1 : 0;
  return out;
}

StateDoc state_doc(const ab::State& st) {
  StateDoc out;
  out.alt = per_terminal_bits(st.altt);
  out.altr = per_terminal_bits(st.altr);
  out.counter_msgs = {{key(Terminal::A), st.file_number[0] + 1},
                      {key(Terminal::B), st.file_number[1] + 1}};
  out.msgt = {{key(Terminal::A), st.msgt(Terminal::A)}, {key(Terminal::B), st.msgt(Terminal::B)}};
  out.stored_msgs = per_terminal(st.stored);
  out.pending = msg_doc(st.pending);
  out.counter = st.counter;
  out.phase = to_string(st.phase);
  return out;
}

StateDoc state_doc(const lynch::State& st) {
  StateDoc out;
  out.alt = per_terminal_bits(st.alt);
  out.altr = per_terminal_bits(st.altr);
  out.altt = per_terminal_bits(st.altt);
  out.vfyt = per_terminal_bits(st.vfyt);
  out.vfyr = per_terminal_bits(st.vfyr);
  out.counter_msgs = {{key(Terminal::A), st.file_number[0] + 1},
                      {key(Terminal::B), st.file_number[1] + 1}};
  out.msgt = {{key(Terminal::A), st.msgt(Terminal::A)}, {key(Terminal::B), st.msgt(Terminal::B)}};
  out.stored_msgs = per_terminal(st.stored);
  out.pending = msg_doc(st.pending);
  out.counter = st.counter;
  out.phase = to_string(st.phase);
  return out;
}

ordered_json to_json(const MsgDoc& msg) {
  ordered_json j{{"receiver", msg.receiver}, {"msgr", msg.msgr}, {"altr", msg.altr}};
  if (msg.vfy) j["vfy"] = *msg.vfy;
  return j;
}

MsgDoc msg_from_json(const ordered_json& j) {
  MsgDoc out;
  out.receiver = j.at("receiver").get<std::string>();
  out.msgr = j.at("msgr").get<std::string>();
  out.altr = j.at("altr").get<int>();
  if (j.contains("vfy")) out.vfy = j.at("vfy").get<int>();
  return out;
}

ordered_json to_json(const StateDoc& st) {
  ordered_json j;
  j["alt"] = st.alt;
  if (st.altt) j["altt"] = *st.altt;
  j["altr"] = st.altr;
  if (st.vfyt) j["vfyt"] = *st.vfyt;
  if (st.vfyr) j["vfyr"] = *st.vfyr;
  j["msgt"] = st.msgt;
  j["counterMsgs"] = st.counter_msgs;
  j["storedMsgs"] = st.stored_msgs;
  j["pendingMsg"] = to_json(st.pending);
  j["counter"] = st.counter;
  j["phase"] = st.phase;
  return j;
}

StateDoc state_from_json(const ordered_json& j) {
  StateDoc out;
  out.alt = j.at("alt").get<std::map<std::string, int>>();
  if (j.contains("altt")) out.altt = j.at("altt").get<std::map<std::string, int>>();
  out.altr = j.at("altr").get<std::map<std::string, int>>();
  if (j.contains("vfyt")) out.vfyt = j.at("vfyt").get<std::map<std::string, int>>();
  if (j.contains("vfyr")) out.vfyr = j.at("vfyr").get<std::map<std::string, int>>();
  out.msgt = j.at("msgt").get<std::map<std::string, std::string>>();
  out.counter_msgs = j.at("counterMsgs").get<std::map<std::string, int>>();
  out.stored_msgs = j.at("storedMsgs").get<std::map<std::string, std::vector<std::string>>>();
  out.pending = msg_from_json(j.at("pendingMsg"));
  out.counter = j.at("counter").get<int>();
  out.phase = j.at("phase").get<std::string>();
  return out;
}

}  // namespace

TraceDocument build(const ab::Config& config, const check::RunTrace& run,
                    const faults::InterleavedTrace& errors) {
  TraceDocument doc;
  doc.protocol = "ab";
  doc.init.starter = key(config.starter);
  doc.init.ic = std::string() + (config.altt0_a ? '1' : '0') + (config.altt0_b ? '1' : '0');
  doc.init.dummy_first = config.dummy_first;
  doc.init.msgs_a = run.initial.schedule_of(Terminal::A);
  doc.init.msgs_b = run.initial.schedule_of(Terminal::B);
  doc.errors = faults::to_bit_string(errors);
  doc.output = run.output;
  doc.steps.reserve(run.steps.size());
  for (const auto& step : run.steps) {
    StepDoc s;
    s.event = step.event;
    s.phase = to_string(step.phase);
    s.pending = msg_doc(step.receive.delivered);
    s.error = step.receive.error;
    s.accepted = step.receive.outcome == Outcome::Accepted;
    s.stuttered = step.receive.outcome == Outcome::Stutter;
    s.state = state_doc(step.post);
    doc.steps.push_back(std::move(s));
  }
  return doc;
}

TraceDocument build(const lynch::Config& config, const check::LynchRunTrace& run,
                    const faults::InterleavedTrace& errors) {
  TraceDocument doc;
  doc.protocol = "lynch";
  doc.init.starter = key(config.starter);
  doc.init.ic = std::string() + static_cast<char>('0' + config.ic.alt_a) +
                static_cast<char>('0' + config.ic.altt_a) +
                static_cast<char>('0' + config.ic.alt_b) +
                static_cast<char>('0' + config.ic.altt_b);
  doc.init.dummy_first = false;
  doc.init.msgs_a = run.initial.schedule_of(Terminal::A);
  doc.init.msgs_b = run.initial.schedule_of(Terminal::B);
  doc.errors = faults::to_bit_string(errors);
  doc.output = run.output;
  doc.steps.reserve(run.steps.size());
  for (const auto& step : run.steps) {
    StepDoc s;
    s.event = step.event;
    s.phase = to_string(step.phase);
    s.pending = msg_doc(step.receive.delivered);
    s.error = step.receive.error;
    s.accepted = step.receive.outcome == Outcome::Accepted;
    s.stuttered = false;
    s.state = state_doc(step.post);
    doc.steps.push_back(std::move(s));
  }
  return doc;
}

nlohmann::ordered_json to_json(const TraceDocument& doc) {
  ordered_json j;
  j["protocol"] = doc.protocol;
  j["init"] = ordered_json{{"starter", doc.init.starter},
                           {"ic", doc.init.ic},
                           {"dummyFirst", doc.init.dummy_first},
                           {"msgsA", doc.init.msgs_a},
                           {"msgsB", doc.init.msgs_b}};
  j["errors"] = doc.errors;
  ordered_json steps = ordered_json::array();
  for (const auto& step : doc.steps) {
    ordered_json s;
    s["event"] = step.event;
    s["phase"] = step.phase;
    s["pendingMsg"] = to_json(step.pending);
    s["error"] = step.error;
    s["accepted"] = step.accepted;
    s["stuttered"] = step.stuttered;
    s["state"] = to_json(step.state);
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  j["output"] = doc.output;
  return j;
}

TraceDocument from_json(const ordered_json& j) {
  TraceDocument doc;
  doc.protocol = j.at("protocol").get<std::string>();
  const auto& init = j.at("init");
  doc.init.starter = init.at("starter").get<std::string>();
  doc.init.ic = init.at("ic").get<std::string>();
  doc.init.dummy_first = init.at("dummyFirst").get<bool>();
  doc.init.msgs_a = init.at("msgsA").get<std::vector<std::string>>();
  doc.init.msgs_b = init.at("msgsB").get<std::vector<std::string>>();
  doc.errors = j.at("errors").get<std::string>();
  for (const auto& s : j.at("steps")) {
    StepDoc step;
    step.event = s.at("event").get<int>();
    step.phase = s.at("phase").get<std::string>();
    step.pending = msg_from_json(s.at("pendingMsg"));
    step.error = s.at("error").get<bool>();
    step.accepted = s.at("accepted").get<bool>();
    step.stuttered = s.at("stuttered").get<bool>();
    step.state = state_from_json(s.at("state"));
    doc.steps.push_back(std::move(step));
  }
  doc.output = j.at("output").get<std::vector<std::string>>();
  return doc;
}

std::string print(const TraceDocument& doc) { return to_json(doc).dump(2) + "\n"; }

TraceDocument parse(const std::string& json_text) {
  ordered_json j = ordered_json::parse(json_text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed trace document", 0);
  try {
    return from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("trace document: ") + e.what(), 0);
  }
}

}  // namespace altbit::doc
