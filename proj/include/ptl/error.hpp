#pragma once

#include <stdexcept>
#include <string>

namespace ptl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised for malformed input documents and expressions.
struct ParseError : Error {
    using Error::Error;
};

// Raised when an operation is called outside its preconditions.
struct PreconditionError : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct FieldMismatch : Error {
    FieldMismatch() : Error("operands live in different fields") {}
};

}  // namespace ptl
