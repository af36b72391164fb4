// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace altbit {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rule produced two updates for the same location with different values.
class ConflictError : public Error {
 public:
  ConflictError(std::string location, std::string first, std::string second)
      : Error("conflicting updates for " + location + ": " + first + " vs " + second),
        location_(std::move(location)),
        first_(std::move(first)),
        second_(std::move(second)) {}

  const std::string& location() const { return location_; }
  const std::string& first_value() const { return first_; }
  const std::string& second_value() const { return second_; }

 private:
  std::string location_;
  std::string first_;
  std::string second_;
};

// A mandatory choose rule was evaluated over an empty range.
class EmptyChoiceError : public Error {
 public:
  EmptyChoiceError() : Error("choose rule evaluated over an empty range") {}
};

// A protocol step was requested in the wrong phase.
class PhaseError : public Error {
 public:
  using Error::Error;
};

class InvalidConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input; carries the offending character position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at index " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

// An exhaustive-exploration bound above the supported limit was requested.
class BoundExceededError : public Error {
 public:
  using Error::Error;
};

class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

// A simulation verdict disagreed with the analytic predicate it is checked against.
class OracleMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace altbit
