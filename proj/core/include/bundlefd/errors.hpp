#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bundlefd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph construction violated simplicity or range constraints.
class InvalidGraph : public Error {
 public:
  using Error::Error;
};

/// A fault set references an element that is not part of the host graph.
class InvalidFaultSet : public Error {
 public:
  using Error::Error;
};

/// Twist data or a hand-assembled total graph is not a Cartesian graph bundle.
class InvalidBundle : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (unknown vertex, bad parameter).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed the configured evaluation budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, unsigned long long required, unsigned long long budget)
      : Error(std::move(what)), required_(required), budget_(budget) {}

  unsigned long long required() const noexcept { return required_; }
  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long required_;
  unsigned long long budget_;
};

/// A theorem-driven routine was invoked while its hypotheses do not hold.
class HypothesisUnmet : public Error {
 public:
  using Error::Error;
};

/// The endpoints are disconnected in the faulty graph.
class NoPath : public Error {
 public:
  using Error::Error;
};

/// A constructed route broke one of its own guarantees (simplicity, fault
/// avoidance or the length bound). Indicates a defect, never bad input.
class RoutingDefect : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace bundlefd
