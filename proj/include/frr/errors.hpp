#pragma once

#include <stdexcept>
#include <string>

namespace frr {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument or contract violation on a public operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed input file; message carries file and line context.
class ParseError : public Error {
public:
    using Error::Error;
};

// Integration blew up or an iteration cap was exceeded.
class NumericalError : public Error {
public:
    using Error::Error;
};

// Even full headroom cannot keep the nadir above the shedding threshold.
class InfeasibleError : public DomainError {
public:
    using DomainError::DomainError;
};

// Post-search scan found the nadir decreasing as reserve grows.
class NonMonotoneError : public DomainError {
public:
    using DomainError::DomainError;
};

} // namespace frr
