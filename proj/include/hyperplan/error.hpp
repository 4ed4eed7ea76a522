#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperplan {

/// Root of every error raised by the library. Callers that only need a
/// diagnostic can catch this and print what().
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownName : public Error {
 public:
  UnknownName(std::string kind, std::string name)
      : Error("unknown " + kind + " '" + name + "'"),
        kind_(std::move(kind)),
        name_(std::move(name)) {}

  const std::string& kind() const { return kind_; }
  const std::string& name() const { return name_; }

 private:
  std::string kind_;
  std::string name_;
};

class NotApplicable : public Error {
 public:
  NotApplicable(std::string state, std::string action)
      : Error("action '" + action + "' is not applicable in state " + state),
        state_(std::move(state)),
        action_(std::move(action)) {}

  const std::string& state() const { return state_; }
  const std::string& action() const { return action_; }

 private:
  std::string state_;
  std::string action_;
};

/// Plan execution reached a step whose action is not applicable in some
/// member of the current belief.
class Undefined : public Error {
 public:
  Undefined(std::size_t step, std::string state)
      : Error("plan execution undefined at step " + std::to_string(step) +
              " in state " + state),
        step_(step),
        state_(std::move(state)) {}

  std::size_t step() const { return step_; }
  const std::string& state() const { return state_; }

 private:
  std::size_t step_;
  std::string state_;
};

/// The precondition holds but no conditional effect fires.
class EmptyEffect : public Error {
 public:
  EmptyEffect(std::string state, std::string action)
      : Error("no conditional effect of '" + action + "' fires in state " +
              state),
        state_(std::move(state)),
        action_(std::move(action)) {}

  const std::string& state() const { return state_; }
  const std::string& action() const { return action_; }

 private:
  std::string state_;
  std::string action_;
};

class Deadlock : public Error {
 public:
  explicit Deadlock(std::string state)
      : Error("reachable state " + state + " has no successor"),
        state_(std::move(state)) {}

  const std::string& state() const { return state_; }

 private:
  std::string state_;
};

/// A structural invariant of a domain value is violated.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotCoSafety : public Error {
 public:
  NotCoSafety(std::string path, std::string subformula)
      : Error("formula is not syntactically co-safe: G at " + path + " (" +
              subformula + ")"),
        path_(std::move(path)) {}

  /// Child-index path ("/1/0") to the offending node of the normalized body.
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class AtomUniverseTooLarge : public Error {
 public:
  AtomUniverseTooLarge(std::size_t atoms, std::size_t cap)
      : Error("atom universe of size " + std::to_string(atoms) +
              " exceeds cap " + std::to_string(cap)),
        atoms_(atoms),
        cap_(cap) {}

  std::size_t atoms() const { return atoms_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t atoms_;
  std::size_t cap_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t col, std::string expected)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(col) + ": expected " + expected),
        line_(line),
        col_(col),
        expected_(std::move(expected)) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t col_;
  std::string expected_;
};

/// A universal quantifier precedes an existential one.
class PrefixShapeError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFeature : public Error {
 public:
  explicit UnsupportedFeature(std::string feature)
      : Error("unsupported feature: " + feature), feature_(std::move(feature)) {}

  const std::string& feature() const { return feature_; }

 private:
  std::string feature_;
};

class TypeError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, std::string reason)
      : Error("schema error at " + (pointer.empty() ? std::string("/") : pointer) +
              ": " + reason),
        pointer_(std::move(pointer)),
        reason_(std::move(reason)) {}

  const std::string& pointer() const { return pointer_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string pointer_;
  std::string reason_;
};

/// A search exceeded its configured belief budget. Never a verdict.
class ResourceLimit : public Error {
 public:
  explicit ResourceLimit(std::size_t explored)
      : Error("belief budget exhausted after " + std::to_string(explored) +
              " beliefs"),
        explored_(explored) {}

  std::size_t explored() const { return explored_; }

 private:
  std::size_t explored_;
};

}  // namespace hyperplan
