#pragma once

#include <stdexcept>
#include <string>

namespace phin {

/// Malformed or mathematically invalid input (bad shape, singular matrix,
/// relation violated, division by zero).  The CLI maps this to exit code 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request that falls outside what the algorithms handle
/// (for example pencil roots outside Q(sqrt p)).  CLI exit code 2.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An invariant that must hold for valid input was found broken.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace phin
