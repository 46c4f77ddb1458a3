#pragma once

#include <stdexcept>
#include <string>

namespace umbra {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's contract (bad parameter, mismatched
/// series orders, unknown identifier).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold: a = 0, lambda = 1, k > n,
/// a non-invertible or non-delta series, an x-dependent functional.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A truncated series does not carry enough terms for the requested result.
class OrderExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace umbra
