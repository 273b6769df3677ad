#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidthom {

/// Input violates a precondition of a group operation (wrong subgroup,
/// index out of range, mismatched strand counts).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The braid word oracle ran past its free-word budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A consistency check on an internal identity failed. Seeing this means a
/// convention bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed literal or script text; `position` is a 0-based byte offset.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace braidthom
