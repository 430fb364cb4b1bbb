#pragma once

#include <stdexcept>
#include <string>

namespace catca {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arity, shape, instance or alphabet mismatch between operands.
class TypeError : public Error {
 public:
  using Error::Error;
};

// An element was used with a group (or subset) it does not belong to.
class MembershipError : public Error {
 public:
  using Error::Error;
};

// The operation is not available for this instance or universe,
// e.g. point evaluation in Rel or realization over an infinite group.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Malformed external input (JSON documents, CLI values).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace catca
