#pragma once

#include <stdexcept>
#include <string>

namespace setgame {

// Error taxonomy mirrored by the CLI exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed game spec, config, or operation input (exit code 2).
struct SpecError : Error {
    using Error::Error;
};

// Empty equilibrium set / no-value verdicts (exit code 3).
struct EmptinessError : Error {
    using Error::Error;
};

// Cloud is not a singleton where a unique value is required (exit code 3).
struct NotSingletonError : Error {
    using Error::Error;
};

// Numeric guard violated: depth/CFL/probability bounds, non-finite values (exit code 4).
struct NumericGuardError : Error {
    using Error::Error;
};

// File system failures (exit code 5).
struct IoError : Error {
    using Error::Error;
};

}  // namespace setgame
