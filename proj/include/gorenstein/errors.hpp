#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gorenstein {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list or certificate input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// An enumeration or recursion guard was exceeded. Never a silent wrong answer.
class ResourceError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class NotSimpleError : public PreconditionError {
public:
    NotSimpleError() : PreconditionError("base checker requires simple graph; use oracle") {}
};

/// Raised when two characterizations that must agree disagree, or a structural invariant breaks.
class InternalContradiction : public Error {
public:
    using Error::Error;
};

}  // namespace gorenstein
