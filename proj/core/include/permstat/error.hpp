#pragma once

#include <stdexcept>
#include <string>

namespace permstat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sequence that is not a rearrangement of 1..n.
class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic left the 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A request would exceed a configured exhaustion bound.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's domain (bad ranks, odd counts, shape mismatch).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace permstat
