#pragma once

#include <stdexcept>
#include <string>

namespace harmsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated: a pole, an out-of-range
/// precision request, a divergent series specification.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical method failed to reach its target (quadrature level limit,
/// acceleration instability, unreachable tolerance).
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The requested digits exceed what a method certifies.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what, int cap) : Error(what), cap_(cap) {}
  int cap() const noexcept { return cap_; }

 private:
  int cap_;
};

}  // namespace harmsum
