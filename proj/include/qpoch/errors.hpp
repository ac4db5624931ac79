// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qpoch {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument on a cut, at a pole, or outside the supported region.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested precision is invalid or exceeds a stored capacity.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A series or product could not reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpoch
