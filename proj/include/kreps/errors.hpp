#pragma once

#include <stdexcept>
#include <string>

namespace kreps {

// Base of all domain errors raised by the library. Precondition violations
// that are plain programming mistakes use std::invalid_argument instead.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

// The closure of a braid has more than one component.
class NotAKnotError : public Error {
public:
  using Error::Error;
};

class NonCommutingError : public Error {
public:
  using Error::Error;
};

// Raised when an enumeration would exceed the configured cap.
class CapExceededError : public Error {
public:
  using Error::Error;
};

// An internal consistency check failed. Seeing one of these means a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace kreps
