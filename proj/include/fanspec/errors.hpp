#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fanspec {

/// Invalid arguments: bad family parameters, out-of-range vertices, bad ratios.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rewiring move whose preconditions do not hold.
class MoveError : public std::invalid_argument {
 public:
  MoveError(const std::string& what, int vertex)
      : std::invalid_argument(what), vertex_(vertex) {}
  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

/// Malformed graph6 input. `offset` is the byte offset of the first bad byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Caller violated an operation's contract (disconnected input, non-equitable quotient).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exhaustive work requested beyond the configured feasibility cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fanspec
