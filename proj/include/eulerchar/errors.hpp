#pragma once

#include <stdexcept>
#include <string>

namespace eulerchar {

/// Malformed input: bad vertex index, parse failure, precondition on user data.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A brute-force guard or generator limit was exceeded.
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic left the signed 64-bit range.
class OverflowError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant was violated. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace eulerchar
