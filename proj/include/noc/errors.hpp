#pragma once

#include <stdexcept>
#include <string>

namespace noc {

// Base class for every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An index or length argument is outside its documented range.
class RangeError : public Error {
public:
    using Error::Error;
};

// The input value is outside the operation's domain (empty code where a
// non-empty one is required, word shorter than 2 symbols, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A documented precondition does not hold, e.g. an operation that requires
// a non-overlapping code was handed an overlapping one.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// The requested search space exceeds the configured candidate cap.
class BudgetError : public Error {
public:
    using Error::Error;
};

// Malformed input text. `line()` is 1-based; 0 means "no line context".
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : Error(what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// An internal consistency check failed; this always indicates a bug.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace noc
