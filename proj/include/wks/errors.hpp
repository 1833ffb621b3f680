#pragma once

#include <stdexcept>
#include <string>

namespace wks {

// Malformed or inconsistent arguments (dimension mismatch, empty inputs, bad tolerance).
class ArgumentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// A series that does not converge for the requested exponent.
class DivergenceError : public DomainError {
  public:
    using DomainError::DomainError;
};

// Inputs for which a bound is not established (e.g. p above the sharp-tail threshold).
class PreconditionError : public DomainError {
  public:
    using DomainError::DomainError;
};

// Root finder given a bracket whose ends do not change sign.
class BracketError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace wks
