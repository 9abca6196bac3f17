#pragma once

#include <stdexcept>

namespace golfstats {

// Base class for all golfstats errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad CSV rows, empty samples, duplicate
// keys, insufficient observations.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Parameter or numeric domain violations: negative sigma, statistics outside
// their range, degenerate fits.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Filesystem failures.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace golfstats
