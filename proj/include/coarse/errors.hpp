#pragma once

#include <stdexcept>
#include <string>

namespace coarse {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different ground sets, or an index is out of range.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A documented size guard refused the request.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: bad JSON document, invalid metric, non-total map.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace coarse
