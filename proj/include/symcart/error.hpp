#pragma once

#include <stdexcept>
#include <string>

namespace symcart {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input: unparsable polynomial, unknown pair, bad document.
class InputError : public Error {
  public:
    using Error::Error;
};

/// A pair definition failed one of its structural identities.
class ValidationError : public InputError {
  public:
    ValidationError(std::string identity, const std::string& what)
        : InputError(identity + ": " + what), identity_(std::move(identity)) {}

    const std::string& identity() const noexcept { return identity_; }

  private:
    std::string identity_;
};

/// The joint spectrum of the Cartan subspace does not split over Q(i).
class UnsupportedSpectrum : public Error {
  public:
    using Error::Error;
};

/// Violated mathematical guarantee; indicates a bug rather than bad input.
class InternalError : public Error {
  public:
    using Error::Error;
};

}  // namespace symcart
