#pragma once

#include <stdexcept>
#include <string>

namespace oddzeta {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration (precision request out of range, bad family tag).
struct ConfigError : Error {
    using Error::Error;
};

// Input outside an operation's mathematical domain (endpoint of a validity
// interval, pole of gamma, argument below a convergence bar).
struct DomainError : Error {
    using Error::Error;
};

// Evaluation at or too close to a pole.
struct PoleError : DomainError {
    using DomainError::DomainError;
};

// A persisted artifact failed validation (header, parse, or recurrence check).
struct IntegrityError : Error {
    using Error::Error;
};

// An evaluator could not reach the digits asked of it.
struct PrecisionShortfall : Error {
    using Error::Error;
};

} // namespace oddzeta
