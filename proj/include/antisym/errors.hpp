#pragma once

#include <stdexcept>
#include <string>

namespace antisym {

/// Raised when a caller violates a documented precondition (bad dimensions,
/// out-of-range parameters, unparseable input). Maps to CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an internal consistency check fails: a construction produced
/// an operator that is not what the algebra promises (commutators too large,
/// rationalisation off, block structure violated). Maps to CLI exit code 3.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace antisym
