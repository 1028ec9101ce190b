#pragma once

#include <stdexcept>
#include <string>

namespace ndga {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A polynomial or operator refers to a variable the presentation does not know.
class PresentationMismatch : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class BoundExceeded : public Error {
public:
    using Error::Error;
};

// An internal cross-check between two independent evaluation routes failed.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace ndga
