#pragma once

#include <stdexcept>
#include <string>

namespace vwc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition. The CLI maps this to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// O_i would create an edge that is already present.
class StructuralConflict : public InputError {
 public:
  using InputError::InputError;
};

/// A size cap (vertex count, polarized variable count) was exceeded. Exit code 3.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace vwc
