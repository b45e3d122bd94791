#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclicdef {

// Closure produced more elements than the configured cap.
class ClosureCapExceeded : public std::runtime_error {
 public:
  ClosureCapExceeded(std::size_t cap)
      : std::runtime_error("group closure exceeded cap of " + std::to_string(cap) +
                           " elements"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// Raised when a group's element counts contradict cyclic-subgroup
// bookkeeping; only a broken closure can trigger it.
class InconsistentGroup : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class CycleSyntaxError : public std::invalid_argument {
 public:
  CycleSyntaxError(const std::string& what, std::size_t column)
      : std::invalid_argument(what), column_(column) {}
  // 0-based offset into the parsed text.
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// Invalid constructor input, including non-homomorphic semidirect actions.
class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace cyclicdef
