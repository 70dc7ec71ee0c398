#pragma once

#include <stdexcept>
#include <string>

namespace tracerec {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad index, bad length, bad probability).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An enumeration or allocation guard was exceeded. Raised instead of silently
/// degrading when an exhaustive routine is asked to do too much work.
class GuardExceeded : public Error {
public:
    using Error::Error;
};

/// The observed traces have probability zero under the supplied priors.
class ZeroProbability : public Error {
public:
    using Error::Error;
};

} // namespace tracerec
