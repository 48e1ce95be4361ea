#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace asyncflow {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands of different widths were combined.
class DimensionError : public Error {
public:
    using Error::Error;
};

// An argument lies outside the domain of the operation (k < -1, bad index).
class DomainError : public Error {
public:
    using Error::Error;
};

// The request exceeds the explicit-table limits (n > 20, diagrams with n > 16).
class CapacityError : public Error {
public:
    using Error::Error;
};

// A theorem checker was invoked on an instance outside its hypothesis.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Malformed text input. Line and column are 1-based; 0 means "not applicable".
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace asyncflow
