#pragma once

#include <stdexcept>
#include <string>

namespace degen {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Query index or symbol outside the structure's domain.
class OutOfBounds : public Error {
public:
    using Error::Error;
};

/// select() asked for an occurrence that does not exist.
class NotFound : public Error {
public:
    using Error::Error;
};

/// Input violates a construction precondition (e.g. empty sets for reduction I).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The chosen base structure cannot represent the alphabet.
class UnsupportedAlphabet : public Error {
public:
    using Error::Error;
};

/// Malformed text or binary input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Arguments outside a function's mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace degen
