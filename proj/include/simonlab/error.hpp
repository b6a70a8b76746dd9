#ifndef SIMONLAB_ERROR_HPP
#define SIMONLAB_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace simonlab {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different fields or have incompatible shapes.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on the inputs does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A decider was handed an input outside the promise.
class PromiseViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or simulation would exceed its configured size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string what_cap, std::uint64_t cap, std::uint64_t requested)
      : Error(what_cap + " too large: requested " + std::to_string(requested) +
              " exceeds cap " + std::to_string(cap)),
        cap_(cap),
        requested_(requested) {}

  std::uint64_t cap() const { return cap_; }
  std::uint64_t requested() const { return requested_; }

 private:
  std::uint64_t cap_;
  std::uint64_t requested_;
};

}  // namespace simonlab

#endif  // SIMONLAB_ERROR_HPP
