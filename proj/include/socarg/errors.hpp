#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace socarg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Framework construction and queries.

class InvalidArgumentId : public Error {
public:
    using Error::Error;
};

class DuplicateArgument : public Error {
public:
    using Error::Error;
};

class UnknownEndpoint : public Error {
public:
    using Error::Error;
};

class UnknownArgument : public Error {
public:
    using Error::Error;
};

class NameCollision : public Error {
public:
    using Error::Error;
};

// Values outside [0,1] handed to the semantic operators.
class DomainError : public Error {
public:
    using Error::Error;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

/// Raised when a solve runs out of budget. Carries the best iterate seen so
/// callers can report how close it got.
class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, std::vector<double> best, double residual)
        : Error(what), best_(std::move(best)), residual_(residual) {}

    const std::vector<double>& best_iterate() const noexcept { return best_; }
    double residual() const noexcept { return residual_; }

private:
    std::vector<double> best_;
    double residual_;
};

class SingularJacobian : public NonConvergence {
public:
    using NonConvergence::NonConvergence;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class DomainViolation : public Error {
public:
    using Error::Error;
};

// .saf parsing.

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class SyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};

class DuplicateVotes : public ParseError {
public:
    using ParseError::ParseError;
};

class NegativeCount : public ParseError {
public:
    using ParseError::ParseError;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace socarg
