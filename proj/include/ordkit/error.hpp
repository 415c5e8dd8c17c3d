#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordkit {

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed order spec, dilator spec, term text or table file.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A precondition on the arguments of an operation does not hold
/// (ambient mismatch, a ⊄ c, arity mismatch of a composition, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A truncated dilator was asked about T_k beyond its arity bound.
class ArityExceeded : public Error {
public:
    ArityExceeded(std::size_t required, std::size_t bound)
        : Error("dilator arity bound " + std::to_string(bound) + " exceeded: T_" +
                std::to_string(required) + " is required"),
          required_(required), bound_(bound) {}

    std::size_t required() const noexcept { return required_; }
    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t required_;
    std::size_t bound_;
};

/// A bounded enumeration was requested from an order or dilator that has no
/// finite fragments (e.g. `nat`).
class Unbounded : public Error {
public:
    using Error::Error;
};

} // namespace ordkit
