#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace innerform {

/// Caller violated an operation's precondition (bad partition, out-of-range index, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Division by the structural zero of Q(v).
struct DivisionByZeroError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Specializing q at a value where the denominator vanishes.
struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// An enumeration would exceed the configured budget.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : std::runtime_error(what + ": requires " + std::to_string(required) + ", budget " + std::to_string(budget)),
        required(required),
        budget(budget) {}
  std::uint64_t required;
  std::uint64_t budget;
};

/// An internal invariant failed; indicates an implementation bug.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace innerform
