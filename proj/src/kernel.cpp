// SPDX-License-Identifier: Apache-2.0
#include "altbit/kernel.hpp"

#include <set>
#include <sstream>
#include <utility>

namespace altbit::kernel {

std::string to_string(const Value& v) {
  struct Printer {
    std::string operator()(const Undef&) const { return "undef"; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t n) const { return std::to_string(n); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const std::vector<std::string>& xs) const {
      std::string out = "[";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) out += ",";
        out += xs[i];
      }
      return out + "]";
    }
  };
  return std::visit(Printer{}, v);
}

std::string to_string(const Location& loc) {
  if (loc.args.empty()) return loc.name;
  std::string out = loc.name + "(";
  for (std::size_t i = 0; i < loc.args.size(); ++i) {
    if (i != 0) out += ",";
    out += to_string(loc.args[i]);
  }
  return out + ")";
}

void UpdateSet::insert(Update update) {
  auto [it, inserted] = entries_.try_emplace(std::move(update.location), update.value);
  if (!inserted && it->second != update.value) {
    throw ConflictError(to_string(it->first), to_string(it->second), to_string(update.value));
  }
}

const Value& UpdateSet::value_of(const Location& location) const {
  auto it = entries_.find(location);
  if (it == entries_.end()) return kUndef;
  return it->second;
}

UpdateSet merge(const UpdateSet& a, const UpdateSet& b) {
  UpdateSet out = a;
  for (const auto& [loc, value] : b) out.insert(loc, value);
  return out;
}

const Value& MachineState::get(const Location& location) const {
  auto it = bindings_.find(location);
  if (it == bindings_.end()) return kUndef;
  return it->second;
}

bool MachineState::get_bool(const Location& location) const {
  const Value& v = get(location);
  if (const bool* b = std::get_if<bool>(&v)) return *b;
  return false;
}

std::int64_t MachineState::get_int(const Location& location) const {
  const Value& v = get(location);
  if (const std::int64_t* n = std::get_if<std::int64_t>(&v)) return *n;
  return 0;
}

const std::string& MachineState::get_label(const Location& location) const {
  static const std::string empty;
  const Value& v = get(location);
  if (const std::string* s = std::get_if<std::string>(&v)) return *s;
  return empty;
}

const std::vector<std::string>& MachineState::get_list(const Location& location) const {
  static const std::vector<std::string> empty;
  const Value& v = get(location);
  if (const auto* xs = std::get_if<std::vector<std::string>>(&v)) return *xs;
  return empty;
}

MachineState apply(const MachineState& state, const UpdateSet& updates) {
  MachineState next = state;
  for (const auto& [loc, value] : updates) {
    if (is_undef(value)) {
      next.bindings_.erase(loc);
    } else {
      next.bindings_[loc] = value;
    }
  }
  return next;
}

MachineState step(const MachineState& state, const Rule& rule) {
  return apply(state, rule(state));
}

Rule seq(std::vector<Rule> rules) {
  return [rules = std::move(rules)](const MachineState& input) {
    MachineState current = input;
    std::set<Location> touched;
    for (const Rule& rule : rules) {
      UpdateSet stage = rule(current);
      for (const auto& [loc, value] : stage) touched.insert(loc);
      current = apply(current, stage);
    }
    UpdateSet net;
    for (const Location& loc : touched) {
      if (current.get(loc) != input.get(loc)) net.insert(loc, current.get(loc));
    }
    return net;
  };
}

Rule forall_merge(std::vector<Value> range, std::function<Rule(const Value&)> body) {
  return [range = std::move(range), body = std::move(body)](const MachineState& state) {
    UpdateSet out;
    for (const Value& x : range) out = merge(out, body(x)(state));
    return out;
  };
}

ChoiceRule choose_branches(std::vector<Value> range, std::function<Rule(const Value&)> body) {
  return [range = std::move(range), body = std::move(body)](const MachineState& state) {
    if (range.empty()) throw EmptyChoiceError();
    std::vector<UpdateSet> branches;
    branches.reserve(range.size());
    for (const Value& x : range) branches.push_back(body(x)(state));
    return branches;
  };
}

Rule assign(Location location, Value value) {
  return [location = std::move(location), value = std::move(value)](const MachineState&) {
    UpdateSet u;
    u.insert(location, value);
    return u;
  };
}

Rule no_op() {
  return [](const MachineState&) { return UpdateSet{}; };
}

}  // namespace altbit::kernel
