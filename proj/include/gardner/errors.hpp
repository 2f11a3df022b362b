#pragma once

#include <stdexcept>
#include <string>

namespace gardner {

/// Base class for every error raised by the solver library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument is outside the domain where the operation is defined.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A linear system could not be factored (pivot below the relative threshold).
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// Unknown scenario name, inconsistent run configuration, bad CLI input.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace gardner
