#pragma once

#include <stdexcept>
#include <string>

namespace scottpersist {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands of incompatible ambient dimension or shape.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A precondition of an operation does not hold (unsupported poset variant,
/// p not below q, violated translation condition, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// A constructed object violates an invariant that the construction should
/// have guaranteed. Indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace scottpersist
