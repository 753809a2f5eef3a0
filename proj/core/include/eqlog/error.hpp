#pragma once

#include <stdexcept>
#include <string>

namespace eqlog {

// Base class of every exception thrown by this library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. Positions are 1-based.
class parse_error : public error {
 public:
  parse_error(const std::string& what, int line, int column)
      : error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// An operation received input outside its vocabulary contract
// (unknown atom, not a sub-/super-vocabulary, ...).
class vocabulary_error : public error {
 public:
  using error::error;
};

// An enumeration would exceed the configured atom cap.
class cap_error : public error {
 public:
  using error::error;
};

// A stated precondition does not hold (incoherent input, entailment
// required but absent, closure violation, query outside its fragment).
class precondition_error : public error {
 public:
  using error::error;
};

// A self-check that must hold by construction failed. Seeing this
// means a bug in the library, never bad user input.
class internal_error : public error {
 public:
  using error::error;
};

}  // namespace eqlog
