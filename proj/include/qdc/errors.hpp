#pragma once

#include <stdexcept>
#include <string>

namespace qdc {

/// Malformed or inconsistent user input (bad JSON, mismatched n, bad index).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on the mathematical domain failed (node out of range,
/// form not in the claimed subspace, degree above a theorem's hypothesis).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An image vector did not lie in the span of the requested codomain basis.
class ContainmentError : public std::runtime_error {
 public:
  ContainmentError(const std::string& what, std::string offending)
      : std::runtime_error(what), offending_(std::move(offending)) {}

  const std::string& offending() const noexcept { return offending_; }

 private:
  std::string offending_;
};

/// A mathematical identity that must hold was found to be false.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qdc
