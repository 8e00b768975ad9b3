#pragma once

#include <stdexcept>
#include <string>

namespace ecg {

// Malformed graphs, walks, orderings or instance files.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] int line() const noexcept { return line_; }

 private:
  int line_;
};

// An exact solver was asked for an instance beyond its configured bound.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, int size, int bound)
      : std::runtime_error(what + " (size " + std::to_string(size) +
                           " exceeds bound " + std::to_string(bound) + ")"),
        size_(size),
        bound_(bound) {}

  [[nodiscard]] int size() const noexcept { return size_; }
  [[nodiscard]] int bound() const noexcept { return bound_; }

 private:
  int size_;
  int bound_;
};

// The requested optimum does not exist (e.g. a separator when x and y are
// adjacent).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input is well formed but outside the class an algorithm accepts.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A transform exists only for a particular number of colors.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ecg
