#pragma once

#include <stdexcept>
#include <string>

namespace osee {

/// Invalid user input or configuration. The CLI maps it to exit code 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed token in an operator string.
class SyntaxError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Index or site outside the lattice.
class RangeError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Well-formed input that has no meaning in the requested mode.
class SemanticError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Failure of a numerical routine or a violated numerical invariant (exit code 3).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be read or written (exit code 4).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace osee
