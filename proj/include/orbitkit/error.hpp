#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbitkit {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed automaton text, unknown token, bad word or sequence syntax.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  explicit ParseError(const std::string& what) : ParseError(0, what) {}

  /// 1-based line of the offending input, 0 when not tied to a line.
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called on an automaton outside its domain
/// (non-deterministic where determinism is required, and so on).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// inverse() on an automaton with two transitions from `state` emitting `letter`.
class NotInvertible : public PreconditionError {
 public:
  NotInvertible(std::string state, std::string letter)
      : PreconditionError("automaton is not invertible: state " + state +
                          " has more than one transition with output " + letter),
        state_(std::move(state)),
        letter_(std::move(letter)) {}

  [[nodiscard]] const std::string& state() const noexcept { return state_; }
  [[nodiscard]] const std::string& letter() const noexcept { return letter_; }

 private:
  std::string state_;
  std::string letter_;
};

/// A caller-supplied resource cap was hit. Never a wrong answer, only no answer.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace orbitkit
