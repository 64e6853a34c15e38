#pragma once

#include <stdexcept>
#include <string>

namespace thicket {

/// Malformed or inconsistent user input: bad grammar, ring mismatch,
/// inhomogeneous entries, failed certificates. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An internal consistency assertion failed (e.g. a residue field object
/// whose cohomology is not one-dimensional over k(p)).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace thicket
