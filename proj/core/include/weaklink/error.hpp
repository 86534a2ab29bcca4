#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weaklink {

// Raised when a cipher, passphrase, charset or attack parameter violates its
// domain invariant (bits < 1, length < 1, rate < 1, ...).
class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised by the oracle when a space is too large to enumerate.
class EnumerationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Config-file errors carry the 1-based line they were detected on (0 when the
// error concerns the file as a whole, e.g. a missing required key).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Bad command-line or API usage that is not a domain violation (unknown
// output format, unknown registry name, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace weaklink
