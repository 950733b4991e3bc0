#pragma once

#include <stdexcept>
#include <string>

namespace mescorr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A tolerance or other configuration value is out of range.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A root finder could not bracket or converge.
class SolverError : public Error {
public:
    using Error::Error;
};

/// The requested truncation cannot be honoured within the cutoff cap.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// Input is numerically degenerate (zero vector, singular Gram matrix).
class DegeneracyError : public Error {
public:
    using Error::Error;
};

} // namespace mescorr
