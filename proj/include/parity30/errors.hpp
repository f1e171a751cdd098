#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace parity30 {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (e.g. n = 0 where n >= 1 is required).
struct DomainError : Error {
  using Error::Error;
};

// Malformed textual input: naturals, bit strings, fg words.
struct ParseError : Error {
  using Error::Error;
};

// A trajectory failed to reach 1 within the configured step ceiling.
// Signals a potentially non-converging input rather than a wrong one.
struct BudgetExceededError : Error {
  BudgetExceededError(const std::string& msg, std::uint64_t steps_taken)
      : Error(msg), steps(steps_taken) {}
  std::uint64_t steps = 0;
};

// A reverse step in decode() is impossible. position is the index of the
// offending symbol in application order (leftmost symbol = 0).
struct InvalidCodewordError : Error {
  InvalidCodewordError(const std::string& msg, std::size_t symbol_position)
      : Error(msg), position(symbol_position) {}
  std::size_t position = 0;
};

// A search or enumeration request violates a desk-scale guard.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace parity30
