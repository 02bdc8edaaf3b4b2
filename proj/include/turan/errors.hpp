#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turan {

// Bad call: a parameter is outside the operation's domain.  CLI exit code 2.
struct argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Structurally valid input that exceeds a supported limit.  CLI exit code 3.
struct capability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Serialized input that cannot be decoded; remembers where it went wrong.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (at byte " + std::to_string(byte_offset) + ")"),
        offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

// A built artifact failed its own validation.  Reaching this is a bug, not a
// user mistake.  CLI exit code 4.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace turan
