#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nok {

/// Base class for all engine errors. Malformed inputs and illegal
/// operations surface as a subclass of this; there are no partial results.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("division by zero") {}
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

/// Syntax error in an expression or rational literal; carries the offset
/// of the offending character.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Violated precondition of an operation (q <= 1, evaluation before an
/// entry time, empty interval, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A scenario document that fails structural or mathematical validation.
class ScenarioError : public Error {
public:
    using Error::Error;
};

} // namespace nok
