#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loopforge {

// Violated mathematical precondition (zero leading unit, order mismatch, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input. `position` is a 0-based offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace loopforge
