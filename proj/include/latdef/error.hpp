#pragma once

#include <stdexcept>
#include <string>

namespace latdef {

/// Malformed input: syntax errors, dimension mismatches, out-of-range values.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request whose mathematical precondition does not hold
/// (e.g. an image representation of an uncontrollable system).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace latdef
