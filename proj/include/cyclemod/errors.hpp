#pragma once

#include <stdexcept>
#include <string>

namespace cyclemod {

// Base of every error thrown by the library. Subclasses carry the failure kind
// so callers (the CLI in particular) can map them onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class EmptySequence : public Error {
 public:
  using Error::Error;
};

class WidthMismatch : public Error {
 public:
  using Error::Error;
};

class SourceUnavailable : public Error {
 public:
  using Error::Error;
};

class ClockUnavailable : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclemod
