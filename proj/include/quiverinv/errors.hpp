#pragma once

#include <stdexcept>
#include <string>

namespace quiverinv {

/// Malformed input: bad file syntax, index mismatch, invalid parameters.
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The input is well formed but violates an operation's precondition
/// (cyclic quiver where acyclic is required, wild algebra where tame is required, ...).
class PreconditionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its configured budget.
class BudgetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A mathematical identity that must hold was found violated.
class InvariantError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive search finished without a witness.
class NotFoundError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace quiverinv
