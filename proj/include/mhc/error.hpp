#pragma once

#include <stdexcept>
#include <string>

namespace mhc {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (group descriptors, sigma specs, rationals, JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid input data, e.g. a table that is not a group or
/// exponents that do not define a character.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// The coboundary failed to map cyclic cochains to cyclic cochains.
class CyclicityError : public Error {
 public:
  using Error::Error;
};

}  // namespace mhc
