// SPDX-License-Identifier: Apache-2.0
//
// Minimal execution core for abstract state machines: locations, simultaneous
// update sets with consistency checking, sequential composition, bounded
// quantification, and branching for nondeterministic choice.
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "altbit/error.hpp"

namespace altbit::kernel {

// Distinguished "no value"; reading an unbound location yields undef rather
// than failing.
struct Undef {
  auto operator<=>(const Undef&) const = default;
};

// The value universe the protocols need: bit, bounded integer, short label,
// list of labels, undef.
using Value = std::variant<Undef, bool, std::int64_t, std::string, std::vector<std::string>>;

inline const Value kUndef = Value{Undef{}};

inline bool is_undef(const Value& v) { return std::holds_alternative<Undef>(v); }

std::string to_string(const Value& v);

// A function name plus the ordered tuple of its arguments. Two locations are
// equal iff both the name and the full argument tuple are equal.
struct Location {
  std::string name;
  std::vector<Value> args;

  auto operator<=>(const Location&) const = default;
};

std::string to_string(const Location& loc);

inline Location loc(std::string name) { return Location{std::move(name), {}}; }
inline Location loc(std::string name, Value arg) {
  return Location{std::move(name), {std::move(arg)}};
}

struct Update {
  Location location;
  Value value;

  bool operator==(const Update&) const = default;
};

// A consistent set of location/value assignments. Inserting the same location
// twice with equal values deduplicates; differing values raise ConflictError.
class UpdateSet {
 public:
  UpdateSet() = default;
  UpdateSet(std::initializer_list<Update> updates) {
    for (const auto& u : updates) insert(u);
  }

  void insert(Update update);
  void insert(Location location, Value value) { insert(Update{std::move(location), std::move(value)}); }

  bool contains(const Location& location) const { return entries_.count(location) != 0; }
  const Value& value_of(const Location& location) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool operator==(const UpdateSet&) const = default;

 private:
  std::map<Location, Value> entries_;
};

UpdateSet merge(const UpdateSet& a, const UpdateSet& b);

// An immutable snapshot of all location bindings. Locations not bound read as
// undef, and binding a location to undef removes it, so states that agree as
// total functions compare equal.
class MachineState {
 public:
  MachineState() = default;

  const Value& get(const Location& location) const;
  bool get_bool(const Location& location) const;
  std::int64_t get_int(const Location& location) const;
  const std::string& get_label(const Location& location) const;
  const std::vector<std::string>& get_list(const Location& location) const;

  const std::map<Location, Value>& bindings() const { return bindings_; }

  bool operator==(const MachineState&) const = default;

 private:
  friend MachineState apply(const MachineState& state, const UpdateSet& updates);

  std::map<Location, Value> bindings_;
};

// Deterministic rules evaluate to one update set; choice rules evaluate to one
// candidate update set per choice. Rules must be pure functions of the state.
using Rule = std::function<UpdateSet(const MachineState&)>;
using ChoiceRule = std::function<std::vector<UpdateSet>(const MachineState&)>;

// Fires all updates simultaneously; locations outside the set keep their value.
MachineState apply(const MachineState& state, const UpdateSet& updates);

MachineState step(const MachineState& state, const Rule& rule);

// Threads intermediate states left to right; the produced update set is the
// net difference between the final and the input state.
Rule seq(std::vector<Rule> rules);

// Merges body(x) over every x in the (finite) range into one update set.
Rule forall_merge(std::vector<Value> range, std::function<Rule(const Value&)> body);

// One candidate update set per range element; evaluating over an empty range
// raises EmptyChoiceError.
ChoiceRule choose_branches(std::vector<Value> range, std::function<Rule(const Value&)> body);

// Convenience rule builders.
Rule assign(Location location, Value value);
Rule no_op();

}  // namespace altbit::kernel
