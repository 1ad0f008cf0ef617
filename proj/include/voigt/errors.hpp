#pragma once

#include <stdexcept>
#include <string>

namespace voigt {

// Bad user-supplied configuration (grid sizes, parameters, config files).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// A caller broke a documented precondition (e.g. non-solenoidal input).
struct ContractViolation : std::logic_error {
    explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

// Malformed or truncated snapshot / data file.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace voigt
