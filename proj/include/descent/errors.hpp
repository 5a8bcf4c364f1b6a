#pragma once

#include <stdexcept>
#include <string>

namespace descent {

// Base of every error raised by the library.  Usage errors (bad input
// shape, malformed text) and mathematical failures are kept apart so the
// command line tool can map them to different exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

class ParseError : public UsageError {
public:
    ParseError(const std::string& where, const std::string& what)
        : UsageError(where.empty() ? what : where + ": " + what), location(where) {}
    std::string location;
};

class MathError : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public MathError {
public:
    DivisionByZero() : MathError("division by zero") {}
};

class NonUnit : public MathError {
public:
    NonUnit() : MathError("element is not a unit (norm is zero)") {}
};

// A numerical decision could not be certified below the precision ceiling.
class Inconclusive : public MathError {
public:
    using MathError::MathError;
};

class SingularParameter : public MathError {
public:
    using MathError::MathError;
};

} // namespace descent
