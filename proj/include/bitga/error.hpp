#pragma once

#include <stdexcept>
#include <string>

namespace bitga {

/// Thrown when a caller breaks an operation's documented precondition.
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

inline void require(bool condition, const char* message) {
  if (!condition) [[unlikely]] {
    throw ContractViolation(message);
  }
}

}  // namespace bitga
