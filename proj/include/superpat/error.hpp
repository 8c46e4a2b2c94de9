#pragma once

#include <stdexcept>
#include <string>

namespace superpat {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input violated an operation's precondition (wrong class, bad shape, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An exhaustive operation was asked to enumerate more than its guard allows.
class SizeGuardError : public Error {
public:
    using Error::Error;
};

/// A constructive algorithm produced a result that failed its own check.
/// Seeing one of these means a bug in the construction, never bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace superpat
