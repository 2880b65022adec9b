#pragma once

#include <stdexcept>
#include <string>

namespace orbitduality {

/// Raised when an operation's precondition on its mathematical input is
/// violated (wrong size parity, partition outside the required class, an
/// invalid (nu, eta) pair, ...). The message names the violated condition.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised for malformed text input (partition strings, data-file records).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orbitduality
