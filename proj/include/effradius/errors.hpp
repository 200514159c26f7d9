#pragma once

#include <stdexcept>
#include <string>

namespace effradius {

// Malformed expression text. `position` is a 0-based byte offset into the
// input; it is also baked into the message.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An evaluation left the domain of a real elementary function (division by
// zero, ln of a non-positive value, ...) or produced a non-finite value.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace effradius
