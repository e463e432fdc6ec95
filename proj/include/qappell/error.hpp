#pragma once

#include <stdexcept>
#include <string>

namespace qappell {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text that is not a valid rational ("p/q" or "p").
class ParseError : public Error {
public:
    using Error::Error;
};

/// A parameter outside its admissible set (q in {0, 1, -1}, a zero scale, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A polynomial sequence whose n-th member does not have degree n.
class MalformedFamily : public Error {
public:
    using Error::Error;
};

/// A moment functional applied to a polynomial beyond its known moments.
class DegreeOverflow : public Error {
public:
    using Error::Error;
};

}  // namespace qappell
